#include "cgc/surface.hpp"

#include <algorithm>
#include <cmath>

namespace cgc {

namespace {

// Ellipsoid surface area by tensor quadrature of |x_phi x x_theta|:
// trapezoid in theta (periodic, spectrally accurate), Gauss-Legendre in phi.
double ellipsoid_area(const Vec3& a) {
    const int n_phi = 192, n_theta = 256;
    std::vector<double> gn, gw;
    gauss_legendre(n_phi, gn, gw);
    double total = 0.0;
    for (int i = 0; i < n_phi; ++i) {
        double phi = 0.5 * M_PI * (gn[i] + 1.0); // [0, pi]
        double wphi = 0.5 * M_PI * gw[i];
        double sp = std::sin(phi), cp = std::cos(phi);
        double row = 0.0;
        for (int j = 0; j < n_theta; ++j) {
            double th = 2.0 * M_PI * j / n_theta;
            double st = std::sin(th), ct = std::cos(th);
            Vec3 xphi(a[0] * cp * ct, a[1] * cp * st, -a[2] * sp);
            Vec3 xth(-a[0] * sp * st, a[1] * sp * ct, 0.0);
            row += xphi.cross(xth).norm();
        }
        total += wphi * row * (2.0 * M_PI / n_theta);
    }
    return total;
}

} // namespace

SurfaceModel::SurfaceModel(SurfaceKind k, const Vec3& axes) : kind_(k), axes_(axes) {
    if (axes_.minCoeff() <= 0.0) throw ConfigError("surface axes must be positive");
    if (kind_ == SurfaceKind::Sphere) {
        tube_radius_ = axes_[0];
        total_area_ = 4.0 * M_PI * axes_[0] * axes_[0];
    } else {
        double cmin = axes_.minCoeff(), cmax = axes_.maxCoeff();
        tube_radius_ = cmin * cmin / cmax;
        total_area_ = ellipsoid_area(axes_);
    }
}

SurfaceModel SurfaceModel::sphere(double radius) {
    if (radius <= 0.0) throw ConfigError("sphere radius must be positive");
    return SurfaceModel(SurfaceKind::Sphere, Vec3(radius, radius, radius));
}

SurfaceModel SurfaceModel::ellipsoid(const Vec3& semi_axes) {
    return SurfaceModel(SurfaceKind::Ellipsoid, semi_axes);
}

double SurfaceModel::implicit_value(const Vec3& p) const {
    return p[0] * p[0] / (axes_[0] * axes_[0]) + p[1] * p[1] / (axes_[1] * axes_[1]) +
           p[2] * p[2] / (axes_[2] * axes_[2]) - 1.0;
}

Vec3 SurfaceModel::project(const Vec3& y) const {
    const double scale = axes_.maxCoeff();
    if (y.norm() < 1e-12 * scale)
        throw DegeneratePoint("projection undefined at the center of symmetry");
    Vec3 p;
    if (kind_ == SurfaceKind::Sphere) {
        p = (axes_[0] / y.norm()) * y;
    } else {
        // Nearest point has x_i = a_i^2 y_i / (a_i^2 + t) with the Lagrange
        // multiplier t solving G(t) = sum a_i^2 y_i^2 / (a_i^2 + t)^2 = 1.
        // G is strictly decreasing, so Newton with a bisection safeguard is
        // exact. Seed from radial scaling.
        const Vec3 a2 = axes_.cwiseProduct(axes_);
        auto G = [&](double t) {
            double s = 0.0;
            for (int i = 0; i < 3; ++i) {
                double d = a2[i] + t;
                s += a2[i] * y[i] * y[i] / (d * d);
            }
            return s - 1.0;
        };
        auto dG = [&](double t) {
            double s = 0.0;
            for (int i = 0; i < 3; ++i) {
                double d = a2[i] + t;
                s += -2.0 * a2[i] * y[i] * y[i] / (d * d * d);
            }
            return s;
        };
        double tlo = -a2.minCoeff() * (1.0 - 1e-12);
        double thi = axes_.maxCoeff() * (y.norm() + axes_.maxCoeff());
        while (G(thi) > 0.0) thi *= 2.0;
        if (G(tlo) < 0.0)
            throw PointOutsideTube("no projection multiplier in bracket");
        double t = axes_.maxCoeff() * axes_.maxCoeff() * (y.norm() / axes_.maxCoeff() - 1.0);
        t = std::clamp(t, tlo, thi);
        for (int it = 0; it < 200; ++it) {
            double g = G(t);
            if (g > 0.0) tlo = t; else thi = t;
            double step = g / dG(t);
            double tn = t - step;
            if (!(tn > tlo && tn < thi)) tn = 0.5 * (tlo + thi); // bisection fallback
            if (std::abs(tn - t) < 1e-16 * (1.0 + std::abs(t)) && std::abs(g) < 1e-14) {
                t = tn;
                break;
            }
            t = tn;
        }
        for (int i = 0; i < 3; ++i) p[i] = a2[i] * y[i] / (a2[i] + t);
    }
    if ((y - p).norm() >= tube_radius_)
        throw PointOutsideTube("point leaves the projection tube");
    return p;
}

double SurfaceModel::distance_to_surface(const Vec3& y) const {
    return (y - project(y)).norm();
}

Vec3 SurfaceModel::normal(const Vec3& p) const {
    if (kind_ == SurfaceKind::Sphere) return p / p.norm();
    Vec3 g(p[0] / (axes_[0] * axes_[0]), p[1] / (axes_[1] * axes_[1]),
           p[2] / (axes_[2] * axes_[2]));
    return g / g.norm();
}

Vec3 SurfaceModel::tangent_projector(const Vec3& p, const Vec3& v) const {
    Vec3 n = normal(p);
    return v - n.dot(v) * n;
}

void SurfaceModel::require_tangent(const Vec3& p, const Vec3& v, const char* what) const {
    Vec3 n = normal(p);
    if (std::abs(n.dot(v)) > 1e-8 * (1.0 + v.norm()))
        throw NonTangentInput(what);
}

Vec3 SurfaceModel::second_fundamental_form(const Vec3& p, const Vec3& v, const Vec3& w) const {
    require_tangent(p, v, "second_fundamental_form: v not tangent");
    require_tangent(p, w, "second_fundamental_form: w not tangent");
    if (kind_ == SurfaceKind::Sphere) {
        return -(v.dot(w) / axes_[0]) * (p / p.norm());
    }
    // Shape operator of the level set F = sum x_i^2/a_i^2 - 1:
    // A_p(v, w) = -(v^T Hess F w / |grad F|) n, Hess F = 2 diag(1/a_i^2).
    Vec3 grad(2.0 * p[0] / (axes_[0] * axes_[0]), 2.0 * p[1] / (axes_[1] * axes_[1]),
              2.0 * p[2] / (axes_[2] * axes_[2]));
    double hvw = 2.0 * (v[0] * w[0] / (axes_[0] * axes_[0]) +
                        v[1] * w[1] / (axes_[1] * axes_[1]) +
                        v[2] * w[2] / (axes_[2] * axes_[2]));
    return -(hvw / grad.norm()) * (grad / grad.norm());
}

Vec3 SurfaceModel::rotate90(const Vec3& p, const Vec3& v) const {
    require_tangent(p, v, "rotate90: input not tangent");
    return normal(p).cross(v);
}

double SurfaceModel::volume_form(const Vec3& p, const Vec3& X, const Vec3& Y) const {
    require_tangent(p, X, "volume_form: X not tangent");
    require_tangent(p, Y, "volume_form: Y not tangent");
    return X.dot(normal(p).cross(Y));
}

} // namespace cgc
