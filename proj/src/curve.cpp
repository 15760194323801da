#include "cgc/curve.hpp"

#include <cmath>

namespace cgc {

void validate_curve(const SurfaceModel& surface, const DiscreteCurve& u, double tol) {
    if (u.M() < 8) throw DegenerateCurve("curve needs at least 8 nodes");
    if (u.M() % 2 != 0) throw DegenerateCurve("node count must be even");
    for (const Vec3& p : u.nodes) {
        if (std::abs(surface.implicit_value(p)) > tol * 10.0 ||
            (p - surface.project(p)).norm() > tol)
            throw DegenerateCurve("curve node off the surface");
    }
}

std::vector<Vec3> derivative(const DiscreteCurve& u) {
    const int m = u.M();
    const double inv_2h = m / (4.0 * M_PI);
    std::vector<Vec3> d(m);
    for (int j = 0; j < m; ++j)
        d[j] = (u.nodes[(j + 1) % m] - u.nodes[(j + m - 1) % m]) * inv_2h;
    return d;
}

double length(const DiscreteCurve& u) {
    const double h = u.grid_step();
    double s = 0.0;
    for (const Vec3& v : derivative(u)) s += v.norm();
    return s * h;
}

double perturbed_length(const DiscreteCurve& u, double eps) {
    if (!(eps > 0.0 && eps < 1.0)) throw EpsilonOutOfRange("eps must lie in (0,1)");
    const double h = u.grid_step();
    const double floor_term = std::pow(eps, 1.0 + eps);
    double s = 0.0;
    for (const Vec3& v : derivative(u))
        s += std::pow(eps * eps + v.squaredNorm(), 0.5 * (1.0 + eps)) - floor_term;
    return s * h;
}

double sobolev_norm(const std::vector<Vec3>& field, double eps) {
    const int m = static_cast<int>(field.size());
    const double h = 2.0 * M_PI / m;
    const double inv_2h = m / (4.0 * M_PI);
    const double p = 1.0 + eps;
    double s = 0.0;
    for (int j = 0; j < m; ++j) {
        Vec3 d = (field[(j + 1) % m] - field[(j + m - 1) % m]) * inv_2h;
        s += std::pow(field[j].norm(), p) + std::pow(d.norm(), p);
    }
    return std::pow(s * h, 1.0 / p);
}

double sup_distance(const DiscreteCurve& u, const DiscreteCurve& v) {
    double s = 0.0;
    for (int j = 0; j < u.M(); ++j)
        s = std::max(s, (u.nodes[j] - v.nodes[j]).norm());
    return s;
}

std::vector<double> node_speeds(const DiscreteCurve& u) {
    std::vector<double> s;
    s.reserve(u.M());
    for (const Vec3& v : derivative(u)) s.push_back(v.norm());
    return s;
}

double speed_rel_std(const DiscreteCurve& u) {
    return rel_std(node_speeds(u));
}

DiscreteCurve project_nodes(const SurfaceModel& surface, const DiscreteCurve& u) {
    DiscreteCurve out = u;
    for (Vec3& p : out.nodes) p = surface.project(p);
    return out;
}

DiscreteCurve resample_arclength(const SurfaceModel& surface, const DiscreteCurve& u, int M_out) {
    if (length(u) < 1e-8) throw DegenerateCurve("cannot resample a curve of zero length");

    DiscreteCurve cur = u;
    // Two rounds: projection after the first round slightly perturbs the
    // spacing, the second round removes the residual.
    for (int round = 0; round < 2; ++round) {
        PeriodicSpline3 spline(cur.nodes);
        const int n = spline.size();
        const int sub = 16;
        // Cumulative arclength table on a refined grid (Gauss 4-point per cell).
        static const double gx[4] = {-0.8611363115940526, -0.3399810435848563,
                                     0.3399810435848563, 0.8611363115940526};
        static const double gw[4] = {0.3478548451374538, 0.6521451548625461,
                                     0.6521451548625461, 0.3478548451374538};
        std::vector<double> cum(n * sub + 1, 0.0);
        for (int c = 0; c < n * sub; ++c) {
            double t0 = static_cast<double>(c) / sub;
            double dt = 1.0 / sub;
            double seg = 0.0;
            for (int q = 0; q < 4; ++q)
                seg += gw[q] * spline.derivative(t0 + 0.5 * dt * (gx[q] + 1.0)).norm();
            cum[c + 1] = cum[c] + seg * 0.5 * dt;
        }
        const double total = cum.back();
        if (total < 1e-8) throw DegenerateCurve("cannot resample a curve of zero length");

        DiscreteCurve out;
        out.nodes.resize(M_out);
        int cell = 0;
        for (int j = 0; j < M_out; ++j) {
            double target = total * j / M_out;
            while (cell + 1 < static_cast<int>(cum.size()) - 1 && cum[cell + 1] < target) ++cell;
            double frac = (target - cum[cell]) / std::max(cum[cell + 1] - cum[cell], 1e-300);
            double t = (cell + frac) / sub;
            out.nodes[j] = surface.project(spline.eval(t));
        }
        cur = out;
    }
    return cur;
}

} // namespace cgc
