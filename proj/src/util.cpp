#include "cgc/util.hpp"

#include <cmath>
#include <stdexcept>

namespace cgc {

static std::vector<double> solve_tridiagonal(std::vector<double> a, // sub
                                             std::vector<double> b, // diag
                                             std::vector<double> c, // super
                                             std::vector<double> r) {
    const size_t n = b.size();
    for (size_t i = 1; i < n; ++i) {
        double m = a[i] / b[i - 1];
        b[i] -= m * c[i - 1];
        r[i] -= m * r[i - 1];
    }
    std::vector<double> x(n);
    x[n - 1] = r[n - 1] / b[n - 1];
    for (size_t i = n - 1; i-- > 0;) x[i] = (r[i] - c[i] * x[i + 1]) / b[i];
    return x;
}

std::vector<double> solve_cyclic_tridiagonal(double diag, double off,
                                             const std::vector<double>& rhs) {
    const size_t n = rhs.size();
    if (n == 1) return {rhs[0] / (diag + 2 * off)};
    if (n == 2) {
        // 2x2 with both off-diagonal couplings doubled by wrap-around.
        double d = diag, o = 2 * off;
        double det = d * d - o * o;
        return {(d * rhs[0] - o * rhs[1]) / det, (d * rhs[1] - o * rhs[0]) / det};
    }
    // Sherman-Morrison: A = T + u v^T with u = gamma*e0 + off*e_{n-1},
    // v = e0 + (off/gamma)*e_{n-1}.
    double gamma = -diag;
    std::vector<double> a(n, off), b(n, diag), c(n, off), r = rhs;
    b[0] -= gamma;
    b[n - 1] -= off * off / gamma;
    a[0] = c[n - 1] = 0.0;
    std::vector<double> u(n, 0.0);
    u[0] = gamma;
    u[n - 1] = off;
    std::vector<double> x = solve_tridiagonal(a, b, c, r);
    std::vector<double> z = solve_tridiagonal(a, b, c, u);
    double vx = x[0] + (off / gamma) * x[n - 1];
    double vz = z[0] + (off / gamma) * z[n - 1];
    double factor = vx / (1.0 + vz);
    for (size_t i = 0; i < n; ++i) x[i] -= factor * z[i];
    return x;
}

void gauss_legendre(int n, std::vector<double>& nodes, std::vector<double>& weights) {
    nodes.assign(n, 0.0);
    weights.assign(n, 0.0);
    const int m = (n + 1) / 2;
    for (int i = 0; i < m; ++i) {
        double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
        double pp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = 0.0;
            for (int j = 0; j < n; ++j) {
                double p2 = p1;
                p1 = p0;
                p0 = ((2.0 * j + 1.0) * x * p1 - j * p2) / (j + 1.0);
            }
            pp = n * (x * p0 - p1) / (x * x - 1.0);
            double dx = p0 / pp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        nodes[i] = -x;
        nodes[n - 1 - i] = x;
        weights[i] = weights[n - 1 - i] = 2.0 / ((1.0 - x * x) * pp * pp);
    }
}

double golden_section_max(const std::function<double(double)>& f, double a, double b,
                          double tol) {
    const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double c = b - inv_phi * (b - a);
    double d = a + inv_phi * (b - a);
    double fc = f(c), fd = f(d);
    while (b - a > tol) {
        if (fc > fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - inv_phi * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + inv_phi * (b - a);
            fd = f(d);
        }
    }
    return 0.5 * (a + b);
}

double extrapolate_to_zero(const double xs[3], const double ys[3]) {
    double r = 0.0;
    for (int i = 0; i < 3; ++i) {
        double li = 1.0;
        for (int j = 0; j < 3; ++j) {
            if (j == i) continue;
            li *= (0.0 - xs[j]) / (xs[i] - xs[j]);
        }
        r += ys[i] * li;
    }
    return r;
}

double mean(const std::vector<double>& v) {
    double s = 0.0;
    for (double x : v) s += x;
    return v.empty() ? 0.0 : s / static_cast<double>(v.size());
}

double rel_std(const std::vector<double>& v) {
    if (v.empty()) return 0.0;
    double m = mean(v);
    double s = 0.0;
    for (double x : v) s += (x - m) * (x - m);
    s = std::sqrt(s / static_cast<double>(v.size()));
    if (m == 0.0) return s == 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
    return s / std::abs(m);
}

PeriodicSpline3::PeriodicSpline3(const std::vector<Vec3>& values) : n_(static_cast<int>(values.size())), y_(values) {
    if (n_ < 3) throw std::invalid_argument("PeriodicSpline3 needs at least 3 points");
    // Uniform grid spacing 1: m_{j-1} + 4 m_j + m_{j+1} = 6 (y_{j+1} - 2 y_j + y_{j-1})
    m_.assign(n_, Vec3::Zero());
    for (int c = 0; c < 3; ++c) {
        std::vector<double> rhs(n_);
        for (int j = 0; j < n_; ++j) {
            const Vec3& ym = y_[(j + n_ - 1) % n_];
            const Vec3& y0 = y_[j];
            const Vec3& yp = y_[(j + 1) % n_];
            rhs[j] = 6.0 * (yp[c] - 2.0 * y0[c] + ym[c]);
        }
        std::vector<double> sol = solve_cyclic_tridiagonal(4.0, 1.0, rhs);
        for (int j = 0; j < n_; ++j) m_[j][c] = sol[j];
    }
}

Vec3 PeriodicSpline3::eval(double t) const {
    double tw = std::fmod(t, static_cast<double>(n_));
    if (tw < 0) tw += n_;
    int j = static_cast<int>(std::floor(tw));
    if (j >= n_) j = n_ - 1;
    double s = tw - j;
    int jp = (j + 1) % n_;
    // Cubic with unit spacing.
    return y_[j] * (1 - s) + y_[jp] * s +
           (s * (1 - s)) * ((m_[j] * (2 - s) + m_[jp] * (1 + s)) * (-1.0 / 6.0));
}

Vec3 PeriodicSpline3::derivative(double t) const {
    double tw = std::fmod(t, static_cast<double>(n_));
    if (tw < 0) tw += n_;
    int j = static_cast<int>(std::floor(tw));
    if (j >= n_) j = n_ - 1;
    double s = tw - j;
    int jp = (j + 1) % n_;
    return (y_[jp] - y_[j]) +
           m_[j] * (-(2.0 - 6.0 * s + 3.0 * s * s) / 6.0) +
           m_[jp] * ((-1.0 + 3.0 * s * s) / 6.0);
}

} // namespace cgc
