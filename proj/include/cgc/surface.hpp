#pragma once

#include "cgc/errors.hpp"
#include "cgc/util.hpp"

namespace cgc {

enum class SurfaceKind { Sphere, Ellipsoid };

// An embedded 2-sphere in R^3 (round sphere or ellipsoid), immutable after
// construction. Provides the nearest-point projection and the pointwise
// geometric operators the functionals need. All members are pure and safe
// for concurrent use.
//
// Orientation convention: the normal is outward, the tangent rotation is
// Q(v) = n x v, and the volume form is Vol(X, Y) = X . Q(Y). With this
// pairing a north-to-south latitude sweep accumulates negative area ("caps
// count south-negative"), and closed curves of geodesic curvature kappa > 0
// sit in the northern hemisphere of the round sphere.
class SurfaceModel {
public:
    static SurfaceModel sphere(double radius);
    static SurfaceModel ellipsoid(const Vec3& semi_axes);

    SurfaceKind kind() const { return kind_; }
    double radius() const { return axes_[0]; }
    const Vec3& semi_axes() const { return axes_; }

    // Radius of the tubular neighborhood on which projection is unique:
    // r for the sphere, c_min^2 / c_max for the ellipsoid.
    double tube_radius() const { return tube_radius_; }
    double total_area() const { return total_area_; }

    // Nearest-point projection. Throws PointOutsideTube when y is farther
    // than tube_radius from the surface, DegeneratePoint near the center.
    Vec3 project(const Vec3& y) const;

    // Outward unit normal at a surface point.
    Vec3 normal(const Vec3& p) const;

    // Orthogonal projection of v onto T_p.
    Vec3 tangent_projector(const Vec3& p, const Vec3& v) const;

    // Second fundamental form A_p(v, w), normal-valued. v, w must be tangent.
    Vec3 second_fundamental_form(const Vec3& p, const Vec3& v, const Vec3& w) const;

    // 90-degree rotation of the tangent plane: Q(v) = n x v.
    Vec3 rotate90(const Vec3& p, const Vec3& v) const;

    // Vol(X, Y) = X . Q_p(Y); antisymmetric.
    double volume_form(const Vec3& p, const Vec3& X, const Vec3& Y) const;

    // Signed residual of the implicit surface equation (0 on the surface).
    double implicit_value(const Vec3& p) const;

    // |p - project(p)| style distance bound check helper.
    double distance_to_surface(const Vec3& y) const;

private:
    SurfaceModel(SurfaceKind k, const Vec3& axes);
    void require_tangent(const Vec3& p, const Vec3& v, const char* what) const;

    SurfaceKind kind_;
    Vec3 axes_;          // (r, r, r) for the sphere
    double tube_radius_;
    double total_area_;
};

} // namespace cgc
