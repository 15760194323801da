#include "cgc/action.hpp"

#include <cmath>

namespace cgc {

namespace {

// One homotopy substep of the area quadrature: midpoint in t, trapezoid with
// central differences in theta, volume form evaluated on the projected
// midpoint curve. Exactly antisymmetric in (a, b).
double substep_area(const SurfaceModel& surface, const DiscreteCurve& a,
                    const DiscreteCurve& b) {
    const int m = a.M();
    const double h = a.grid_step();
    const double inv_2h = m / (4.0 * M_PI);
    DiscreteCurve mid;
    mid.nodes.resize(m);
    for (int j = 0; j < m; ++j)
        mid.nodes[j] = surface.project(0.5 * (a.nodes[j] + b.nodes[j]));
    double s = 0.0;
    for (int j = 0; j < m; ++j) {
        const Vec3& c = mid.nodes[j];
        Vec3 n = surface.normal(c);
        Vec3 dt = b.nodes[j] - a.nodes[j];
        dt -= n.dot(dt) * n;
        Vec3 dth = (mid.nodes[(j + 1) % m] - mid.nodes[(j + m - 1) % m]) * inv_2h;
        dth -= n.dot(dth) * n;
        s += dt.dot(n.cross(dth));
    }
    return s * h;
}

} // namespace

double area_increment(const SurfaceModel& surface, const DiscreteCurve& u,
                      const DiscreteCurve& v, const AreaOptions& opts) {
    if (u.M() != v.M()) throw CurvesTooFar("area_increment: node counts differ");
    const double sup = sup_distance(u, v);
    if (sup >= 0.5 * surface.tube_radius())
        throw CurvesTooFar("area_increment: curves farther than tube_radius/2");
    if (sup == 0.0) return 0.0;

    const double limit =
        std::min(0.25 * surface.tube_radius(), 2.0 * M_PI / u.M()) / opts.substep_refine;
    int K = std::max(1, static_cast<int>(std::ceil(sup / limit)));
    if (K > opts.max_substeps) throw CurvesTooFar("area_increment: too many substeps");

    double total = 0.0;
    DiscreteCurve prev = u;
    for (int k = 1; k <= K; ++k) {
        DiscreteCurve next;
        if (k == K) {
            next = v;
        } else {
            next.nodes.resize(u.M());
            double t = static_cast<double>(k) / K;
            for (int j = 0; j < u.M(); ++j)
                next.nodes[j] = surface.project((1.0 - t) * u.nodes[j] + t * v.nodes[j]);
        }
        total += substep_area(surface, prev, next);
        prev = std::move(next);
    }
    return total;
}

double weighted_action(const DiscreteCurve& u, const AreaLedger& ledger,
                       const ActionParams& params) {
    params.validate();
    if (ledger.base.M() != u.M() || sup_distance(ledger.base, u) > 1e-12)
        throw LedgerMismatch("weighted_action: ledger base is not the given curve");
    return perturbed_length(u, params.eps) + params.kappa * ledger.accumulated;
}

std::vector<Vec3> action_gradient(const SurfaceModel& surface, const DiscreteCurve& u,
                                  const ActionParams& params) {
    params.validate();
    const int m = u.M();
    const double inv_2h = m / (4.0 * M_PI);
    const double eps = params.eps;
    const std::vector<Vec3> du = derivative(u);

    std::vector<Vec3> momentum(m); // w_j u'_j
    std::vector<double> w(m);
    for (int j = 0; j < m; ++j) {
        w[j] = std::pow(eps * eps + du[j].squaredNorm(), 0.5 * (eps - 1.0));
        momentum[j] = w[j] * du[j];
    }

    std::vector<Vec3> g(m);
    for (int j = 0; j < m; ++j) {
        Vec3 dmom = (momentum[(j + 1) % m] - momentum[(j + m - 1) % m]) * inv_2h;
        Vec3 t = surface.tangent_projector(u.nodes[j], du[j]);
        Vec3 a = surface.second_fundamental_form(u.nodes[j], t, t);
        Vec3 q = surface.normal(u.nodes[j]).cross(du[j]);
        g[j] = -(1.0 + eps) * dmom + (1.0 + eps) * w[j] * a + params.kappa * q;
    }
    return g;
}

double first_variation(const SurfaceModel& surface, const DiscreteCurve& u,
                       const TangentField& psi, const ActionParams& params) {
    params.validate();
    const int m = u.M();
    if (static_cast<int>(psi.size()) != m)
        throw NonTangentInput("first_variation: field size mismatch");
    for (int j = 0; j < m; ++j) {
        Vec3 n = surface.normal(u.nodes[j]);
        if (std::abs(n.dot(psi[j])) > 1e-8 * (1.0 + psi[j].norm()))
            throw NonTangentInput("first_variation: field not tangent");
    }
    const double h = u.grid_step();
    const double inv_2h = m / (4.0 * M_PI);
    const double eps = params.eps;
    const std::vector<Vec3> du = derivative(u);
    double s = 0.0;
    for (int j = 0; j < m; ++j) {
        Vec3 dpsi = (psi[(j + 1) % m] - psi[(j + m - 1) % m]) * inv_2h;
        double w = std::pow(eps * eps + du[j].squaredNorm(), 0.5 * (eps - 1.0));
        Vec3 q = surface.normal(u.nodes[j]).cross(du[j]);
        s += (1.0 + eps) * w * du[j].dot(dpsi) + params.kappa * psi[j].dot(q);
    }
    return s * h;
}

DualNormEstimate dual_norms(const SurfaceModel& surface, const DiscreteCurve& u,
                            const ActionParams& params,
                            const std::vector<TangentField>& samples) {
    if (samples.empty()) throw EmptySampleSet("dual_norms: no sample fields");
    DualNormEstimate est;
    for (const TangentField& raw : samples) {
        TangentField proj(raw.size());
        for (int j = 0; j < u.M(); ++j)
            proj[j] = surface.tangent_projector(u.nodes[j], raw[j]);
        double gval = first_variation(surface, u, proj, params); // G = dL o P
        est.g_estimate = std::max(est.g_estimate, std::abs(gval));
        double norm = sobolev_norm(proj, params.eps);
        TangentField unit = proj;
        if (norm > 1.0)
            for (Vec3& v : unit) v /= norm;
        est.delta_estimate =
            std::max(est.delta_estimate, std::abs(first_variation(surface, u, unit, params)));
    }
    return est;
}

DegreeResult sweep_degree(const SurfaceModel& surface, std::span<const DiscreteCurve> slices,
                          const AreaOptions& opts) {
    double swept = 0.0;
    for (size_t i = 0; i + 1 < slices.size(); ++i)
        swept += area_increment(surface, slices[i], slices[i + 1], opts);
    // Outward-oriented degree; the ledger form is opposite-signed.
    double x = -swept / surface.total_area();
    DegreeResult r;
    r.degree = static_cast<int>(std::lround(x));
    r.residual = std::abs(x - r.degree);
    if (r.residual > 0.05) throw AmbiguousDegree("sweep degree residual exceeds 0.05");
    return r;
}

double projected_gradient_sup(const SurfaceModel& surface, const DiscreteCurve& u,
                              const ActionParams& params) {
    std::vector<Vec3> g = action_gradient(surface, u, params);
    double s = 0.0;
    for (int j = 0; j < u.M(); ++j)
        s = std::max(s, surface.tangent_projector(u.nodes[j], g[j]).norm());
    return s;
}

} // namespace cgc
