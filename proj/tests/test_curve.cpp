#include <doctest.h>

#include "cgc/curve.hpp"
#include "test_helpers.hpp"

using namespace cgc;
using namespace cgc::testing;

TEST_CASE("derivative: constant, analytic, and reversal") {
    SurfaceModel s = SurfaceModel::sphere(1.0);
    const int M = 256;

    DiscreteCurve c = constant_curve(Vec3(0, 0, 1), M);
    for (const Vec3& d : derivative(c)) CHECK(d.norm() == 0.0);

    DiscreteCurve eq = equator(M);
    std::vector<Vec3> d = derivative(eq);
    double worst = 0.0;
    for (int j = 0; j < M; ++j) {
        double th = 2.0 * M_PI * j / M;
        worst = std::max(worst, (d[j] - Vec3(-std::sin(th), std::cos(th), 0)).norm());
    }
    CHECK(worst < 4.0 * std::pow(2.0 * M_PI / M, 2));

    DiscreteCurve rev;
    rev.nodes.resize(M);
    for (int j = 0; j < M; ++j) rev.nodes[j] = eq.nodes[(M - j) % M];
    std::vector<Vec3> dr = derivative(rev);
    for (int j = 0; j < M; ++j) CHECK((dr[j] + d[(M - j) % M]).norm() < 1e-14);

    validate_curve(s, eq);
    CHECK_THROWS_AS(validate_curve(s, constant_curve(Vec3(0, 0, 2), 16)), DegenerateCurve);
}

TEST_CASE("length of equator and latitude circles") {
    const int M = 256;
    CHECK(length(constant_curve(Vec3(0, 0, 1), M)) == 0.0);
    CHECK(length(equator(M)) == doctest::Approx(2.0 * M_PI).epsilon(1e-4));
    for (double phi : {0.4, 1.0, 2.2})
        CHECK(length(latitude_circle(phi, M)) ==
              doctest::Approx(2.0 * M_PI * std::sin(phi)).epsilon(1e-4));
}

TEST_CASE("perturbed length: closed forms and eps -> 0 limit") {
    const int M = 256;
    CHECK(perturbed_length(constant_curve(Vec3(0, 0, 1), M), 0.3) == doctest::Approx(0.0));
    CHECK_THROWS_AS(perturbed_length(equator(M), 0.0), EpsilonOutOfRange);
    CHECK_THROWS_AS(perturbed_length(equator(M), 1.0), EpsilonOutOfRange);

    // Unit-speed equator, eps = 0.1: 2 pi [(1.01)^0.55 - 0.1^1.1].
    double expected = 2.0 * M_PI * (std::pow(1.01, 0.55) - std::pow(0.1, 1.1));
    CHECK(expected == doctest::Approx(5.8186).epsilon(1e-3));
    CHECK(perturbed_length(equator(M), 0.1) == doctest::Approx(expected).epsilon(1e-4));

    double L = length(equator(M));
    double prev_gap = 1e300;
    for (double eps : {0.1, 0.01, 0.001}) {
        double gap = std::abs(perturbed_length(equator(M), eps) - L);
        CHECK(gap < 2.0 * eps); // |L_eps - L| <= A0 * eps with A0 = 2
        CHECK(gap < prev_gap);
        prev_gap = gap;
    }

    // Non-negative on random curves.
    SurfaceModel s = SurfaceModel::sphere(1.0);
    Rng rng(2);
    for (int i = 0; i < 20; ++i)
        CHECK(perturbed_length(random_curve(s, rng, M), 0.2) >= 0.0);
}

TEST_CASE("perturbed length is invariant under node rotation") {
    SurfaceModel s = SurfaceModel::sphere(1.0);
    Rng rng(9);
    DiscreteCurve u = random_curve(s, rng, 64);
    DiscreteCurve rot;
    rot.nodes.resize(u.M());
    for (int j = 0; j < u.M(); ++j) rot.nodes[j] = u.nodes[(j + 17) % u.M()];
    CHECK(perturbed_length(u, 0.13) == doctest::Approx(perturbed_length(rot, 0.13)).epsilon(1e-14));
}

TEST_CASE("sobolev norm closed forms") {
    const int M = 128;
    std::vector<Vec3> zero(M, Vec3::Zero());
    CHECK(sobolev_norm(zero, 0.3) == 0.0);

    Vec3 c(0.3, -1.2, 0.4);
    std::vector<Vec3> cf(M, c);
    for (double eps : {0.1, 0.5})
        CHECK(sobolev_norm(cf, eps) ==
              doctest::Approx(c.norm() * std::pow(2.0 * M_PI, 1.0 / (1.0 + eps))).epsilon(1e-12));

    // Refinement study on the equator field.
    double n1 = sobolev_norm(equator(256).nodes, 0.5);
    double n2 = sobolev_norm(equator(4096).nodes, 0.5);
    CHECK(std::abs(n1 - n2) < 1e-6 * n2 + 1e-6);
}

TEST_CASE("quadrature convergence: doubling M changes L and L_eps by O(M^-2)") {
    auto tilted = [](int M) {
        DiscreteCurve c;
        c.nodes.resize(M);
        for (int j = 0; j < M; ++j) {
            double th = 2.0 * M_PI * j / M;
            Vec3 p(std::cos(th), 0.8 * std::sin(th), 0.3 * std::sin(2.0 * th));
            c.nodes[j] = p.normalized();
        }
        return c;
    };
    double l1 = length(tilted(128)), l2 = length(tilted(256)), l4 = length(tilted(512));
    CHECK(std::abs(l2 - l4) < 0.3 * std::abs(l1 - l2)); // ratio ~ 1/4
    double p1 = perturbed_length(tilted(128), 0.2), p2 = perturbed_length(tilted(256), 0.2),
           p4 = perturbed_length(tilted(512), 0.2);
    CHECK(std::abs(p2 - p4) < 0.3 * std::abs(p1 - p2));
}

TEST_CASE("basic estimates with A0 = 2, fuzzed") {
    SurfaceModel s = SurfaceModel::sphere(1.0);
    Rng rng(1234);
    const int M = 64;
    for (int i = 0; i < 1000; ++i) {
        double eps = rng.uniform(0.01, 0.5);
        DiscreteCurve u = random_curve(s, rng, M, 4, rng.uniform(0.05, 0.6));
        double L = length(u), Le = perturbed_length(u, eps);
        CHECK(L <= 2.0 * eps + 2.0 * std::pow(Le, 1.0 / (1.0 + eps)) + 1e-12);

        DiscreteCurve v = random_curve(s, rng, M, 4, rng.uniform(0.05, 0.6));
        double Lv = perturbed_length(v, eps);
        std::vector<Vec3> diff(M), du = derivative(u), dv = derivative(v);
        for (int j = 0; j < M; ++j) diff[j] = u.nodes[j] - v.nodes[j];
        double p = 1.0 + eps, h = 2.0 * M_PI / M;
        double nu = 0.0, nv = 0.0;
        for (int j = 0; j < M; ++j) {
            nu += std::pow(du[j].norm(), p) * h;
            nv += std::pow(dv[j].norm(), p) * h;
        }
        nu = std::pow(nu, 1.0 / p);
        nv = std::pow(nv, 1.0 / p);
        double rhs = 2.0 * std::pow(nu + nv, 0.5 * p) * std::pow(sobolev_norm(diff, eps), 0.5 * p);
        CHECK(std::abs(Le - Lv) <= rhs + 1e-12);
    }
}

TEST_CASE("resample_arclength") {
    SurfaceModel s = SurfaceModel::sphere(1.0);
    const int M = 256;

    CHECK_THROWS_AS(resample_arclength(s, constant_curve(Vec3(0, 0, 1), M), M),
                    DegenerateCurve);

    // Already uniform equator: fixed up to node rotation.
    DiscreteCurve eq = equator(M);
    DiscreteCurve r = resample_arclength(s, eq, M);
    CHECK(speed_rel_std(r) < 1e-6);
    double worst = 0.0;
    for (int j = 0; j < M; ++j) {
        double best = 1e300;
        for (int o = 0; o < M; ++o) best = std::min(best, (r.nodes[j] - eq.nodes[o]).norm());
        worst = std::max(worst, best);
    }
    CHECK(worst < 1e-6);

    // Clustered sampling of the equator resamples to uniform speed with the
    // same underlying length.
    const int Mc = 2048;
    DiscreteCurve clustered;
    clustered.nodes.resize(Mc);
    for (int j = 0; j < Mc; ++j) {
        double t = 2.0 * M_PI * j / Mc;
        double th = t + 0.45 * std::sin(t); // smooth non-uniform parametrization
        clustered.nodes[j] = Vec3(std::cos(th), std::sin(th), 0.0);
    }
    DiscreteCurve ru = resample_arclength(s, clustered, Mc);
    CHECK(speed_rel_std(ru) < 1e-6);
    CHECK(length(ru) == doctest::Approx(length(clustered)).epsilon(1e-6));
    for (const Vec3& p : ru.nodes) CHECK(std::abs(p[2]) < 1e-9);
}
