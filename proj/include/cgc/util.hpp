#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include <Eigen/Dense>

namespace cgc {

using Vec3 = Eigen::Vector3d;

// Deterministic PRNG. std::uniform_real_distribution is implementation
// defined, so uniforms are derived from raw mt19937_64 output directly to
// keep runs reproducible across standard libraries.
class Rng {
public:
    explicit Rng(uint64_t seed) : state_(seed) {}

    double uniform() {
        return static_cast<double>(next() >> 11) * 0x1.0p-53;
    }
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
    // Marsaglia polar would need rejection bookkeeping; Box-Muller is fine here.
    double normal() {
        double u1 = uniform();
        double u2 = uniform();
        if (u1 < 1e-300) u1 = 1e-300;
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
    }
    Vec3 vec_in_ball(double radius) {
        for (;;) {
            Vec3 v(uniform(-1, 1), uniform(-1, 1), uniform(-1, 1));
            if (v.squaredNorm() <= 1.0) return radius * v;
        }
    }
    uint64_t next() {
        // xorshift-multiply step of splitmix64; self-contained and portable.
        uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

private:
    uint64_t state_;
};

// Solves a cyclic tridiagonal system with constant coefficients:
//   diag*x[i] + off*(x[i-1] + x[i+1]) = r[i]   (indices mod n)
// via Sherman-Morrison on top of the Thomas algorithm.
std::vector<double> solve_cyclic_tridiagonal(double diag, double off,
                                             const std::vector<double>& rhs);

// Gauss-Legendre nodes/weights on [-1, 1].
void gauss_legendre(int n, std::vector<double>& nodes, std::vector<double>& weights);

// Golden-section search for the maximum of f on [a, b].
double golden_section_max(const std::function<double(double)>& f, double a, double b,
                          double tol = 1e-12);

// Quadratic (three-point) extrapolation of f(x) to x = 0.
double extrapolate_to_zero(const double xs[3], const double ys[3]);

double mean(const std::vector<double>& v);
double rel_std(const std::vector<double>& v); // std / |mean|; 0 mean -> inf

// Periodic natural cubic spline on a uniform grid over [0, 2*pi), one
// component per coordinate. Used for arclength resampling.
class PeriodicSpline3 {
public:
    explicit PeriodicSpline3(const std::vector<Vec3>& values);
    Vec3 eval(double t) const;        // t in grid units, wraps mod n
    Vec3 derivative(double t) const;  // d/dt in grid units
    int size() const { return n_; }

private:
    int n_;
    std::vector<Vec3> y_;
    std::vector<Vec3> m_; // second derivatives at the nodes
};

} // namespace cgc
