#pragma once

#include <vector>

#include "cgc/surface.hpp"

namespace cgc {

// Closed curve sampled at theta_j = 2*pi*j/M on a uniform grid. Value type;
// all operations are pure. M must be >= 8 and even (clean periodic stencils).
struct DiscreteCurve {
    std::vector<Vec3> nodes;

    int M() const { return static_cast<int>(nodes.size()); }
    double grid_step() const { return 2.0 * M_PI / M(); }
};

// A field of tangent vectors along a curve, one per node.
using TangentField = std::vector<Vec3>;

// Throws if M < 8, M odd, or a node is farther than tol from the surface.
void validate_curve(const SurfaceModel& surface, const DiscreteCurve& u, double tol = 1e-10);

// Central periodic differences: (u_{j+1} - u_{j-1}) * M / (4*pi).
std::vector<Vec3> derivative(const DiscreteCurve& u);

// Trapezoid quadrature of |u'|.
double length(const DiscreteCurve& u);

// L_eps(u) = int [(eps^2 + |u'|^2)^{(1+eps)/2} - eps^{1+eps}] dtheta, eps in (0,1).
double perturbed_length(const DiscreteCurve& u, double eps);

// W^{1,1+eps} norm of a discrete field (or of a curve's node array):
// (int |f|^{1+eps} + |f'|^{1+eps})^{1/(1+eps)}.
double sobolev_norm(const std::vector<Vec3>& field, double eps);

double sup_distance(const DiscreteCurve& u, const DiscreteCurve& v);

// Node speeds |u'_j| and their statistics.
std::vector<double> node_speeds(const DiscreteCurve& u);
double speed_rel_std(const DiscreteCurve& u);

// Resample to M_out nodes equispaced in arclength, via a periodic cubic
// spline through the input nodes followed by projection to the surface.
// Throws DegenerateCurve when the input has (near) zero length.
DiscreteCurve resample_arclength(const SurfaceModel& surface, const DiscreteCurve& u, int M_out);

// Project every node; the standard cleanup after a mutation.
DiscreteCurve project_nodes(const SurfaceModel& surface, const DiscreteCurve& u);

} // namespace cgc
