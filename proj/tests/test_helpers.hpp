#pragma once

#include <cmath>

#include "cgc/curve.hpp"
#include "cgc/surface.hpp"
#include "cgc/util.hpp"

namespace cgc::testing {

// Latitude circle at colatitude phi on the unit sphere, counterclockwise
// seen from the north pole, uniform theta grid.
inline DiscreteCurve latitude_circle(double phi, int M, double radius = 1.0) {
    DiscreteCurve c;
    c.nodes.resize(M);
    for (int j = 0; j < M; ++j) {
        double th = 2.0 * M_PI * j / M;
        c.nodes[j] = radius * Vec3(std::sin(phi) * std::cos(th),
                                   std::sin(phi) * std::sin(th), std::cos(phi));
    }
    return c;
}

inline DiscreteCurve equator(int M, double radius = 1.0) {
    return latitude_circle(0.5 * M_PI, M, radius);
}

inline DiscreteCurve constant_curve(const Vec3& p, int M) {
    DiscreteCurve c;
    c.nodes.assign(M, p);
    return c;
}

// Smooth random closed curve on the surface: low-frequency Fourier modes in
// each coordinate, projected nodewise.
inline DiscreteCurve random_curve(const SurfaceModel& surface, Rng& rng, int M,
                                  int max_mode = 4, double amplitude = 0.35) {
    DiscreteCurve base = equator(M, surface.semi_axes()[0]);
    DiscreteCurve out;
    out.nodes.resize(M);
    double a[3][2 * 8 + 1][2];
    for (int c = 0; c < 3; ++c)
        for (int k = 0; k <= max_mode; ++k) {
            double decay = 1.0 / (1.0 + k * k);
            a[c][k][0] = rng.uniform(-1, 1) * amplitude * decay;
            a[c][k][1] = rng.uniform(-1, 1) * amplitude * decay;
        }
    for (int j = 0; j < M; ++j) {
        double th = 2.0 * M_PI * j / M;
        Vec3 p = base.nodes[j];
        for (int c = 0; c < 3; ++c)
            for (int k = 0; k <= max_mode; ++k)
                p[c] += a[c][k][0] * std::cos(k * th) + a[c][k][1] * std::sin(k * th);
        out.nodes[j] = surface.project(p);
    }
    return out;
}

// Random tangent field along u with unit-scale amplitudes.
inline TangentField random_tangent_field(const SurfaceModel& surface, const DiscreteCurve& u,
                                         Rng& rng, int max_mode = 4, double amplitude = 0.5) {
    const int m = u.M();
    TangentField psi(m);
    double a[3][2 * 8 + 1][2];
    for (int c = 0; c < 3; ++c)
        for (int k = 0; k <= max_mode; ++k) {
            double decay = 1.0 / (1.0 + k);
            a[c][k][0] = rng.uniform(-1, 1) * amplitude * decay;
            a[c][k][1] = rng.uniform(-1, 1) * amplitude * decay;
        }
    for (int j = 0; j < m; ++j) {
        double th = 2.0 * M_PI * j / m;
        Vec3 v = Vec3::Zero();
        for (int c = 0; c < 3; ++c)
            for (int k = 0; k <= max_mode; ++k)
                v[c] += a[c][k][0] * std::cos(k * th) + a[c][k][1] * std::sin(k * th);
        psi[j] = surface.tangent_projector(u.nodes[j], v);
    }
    return psi;
}

} // namespace cgc::testing
