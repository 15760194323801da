#pragma once

#include <span>
#include <utility>

#include "cgc/curve.hpp"

namespace cgc {

struct ActionParams {
    double kappa = 1.0; // prescribed curvature, >= 0
    double eps = 1e-3;  // regularization parameter, in (0, 1)

    void validate() const {
        if (kappa < 0.0) throw ConfigError("kappa must be non-negative");
        if (!(eps > 0.0 && eps < 1.0)) throw EpsilonOutOfRange("eps must lie in (0,1)");
    }
};

struct AreaOptions {
    // Each homotopy substep may move nodes by at most
    // min(tube_radius/4, 2*pi/M) / substep_refine in sup norm.
    double substep_refine = 6.0;
    int max_substeps = 1 << 20;
};

// Signed area swept by the projected straight-line homotopy from u to v,
// integrated with the solver's volume form (midpoint rule in t, node-centered
// central differences in theta). Exactly antisymmetric in (u, v).
// Throws CurvesTooFar when ||u - v||_inf >= tube_radius / 2.
double area_increment(const SurfaceModel& surface, const DiscreteCurve& u,
                      const DiscreteCurve& v, const AreaOptions& opts = {});

// Continuous (unwrapped) accumulation of enclosed area along a homotopy.
// Sequential by construction; one ledger per homotopy thread.
struct AreaLedger {
    double accumulated = 0.0;
    DiscreteCurve base;

    static AreaLedger start_at(const DiscreteCurve& u) { return AreaLedger{0.0, u}; }
    void advance(const SurfaceModel& surface, const DiscreteCurve& next,
                 const AreaOptions& opts = {}) {
        accumulated += area_increment(surface, base, next, opts);
        base = next;
    }
};

// L_{kappa,eps}(u, ledger) = L_eps(u) + kappa * accumulated area.
// Throws LedgerMismatch unless ledger.base == u.
double weighted_action(const DiscreteCurve& u, const AreaLedger& ledger,
                       const ActionParams& params);

// Strong-form Riesz representative of the first variation:
//   g_j = -(1+eps) D[w u']_j + (1+eps) w_j A(u'_j, u'_j) + kappa Q(u'_j),
// with w = (eps^2 + |u'|^2)^{(eps-1)/2} and D the same central stencil as
// `derivative`, so that sum_j g_j . psi_j h equals the quadrature of the
// weak form for every discrete field psi (discrete summation by parts is
// exact).
std::vector<Vec3> action_gradient(const SurfaceModel& surface, const DiscreteCurve& u,
                                  const ActionParams& params);

// Quadrature of the weak first variation against a tangent field.
// Throws NonTangentInput when psi is not tangent along u.
double first_variation(const SurfaceModel& surface, const DiscreteCurve& u,
                       const TangentField& psi, const ActionParams& params);

// Sampled lower bounds for the dual norms ||delta L|| and ||G||.
// G pairs each raw sample through the tangent projection (G = dL o P); the
// delta estimate renormalizes the projected samples into the unit ball.
struct DualNormEstimate {
    double delta_estimate = 0.0;
    double g_estimate = 0.0;
};
DualNormEstimate dual_norms(const SurfaceModel& surface, const DiscreteCurve& u,
                            const ActionParams& params,
                            const std::vector<TangentField>& samples);

// Brouwer degree of the map induced by a slice family, computed against the
// outward orientation: deg = round(-sum of area increments / total area).
// The north-to-south latitude sweepout has degree +1.
struct DegreeResult {
    int degree = 0;
    double residual = 0.0;
};
DegreeResult sweep_degree(const SurfaceModel& surface, std::span<const DiscreteCurve> slices,
                          const AreaOptions& opts = {});

// Helpers shared with the flow: sup-norm of the tangent-projected gradient.
double projected_gradient_sup(const SurfaceModel& surface, const DiscreteCurve& u,
                              const ActionParams& params);

} // namespace cgc
