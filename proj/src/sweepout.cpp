#include "cgc/sweepout.hpp"

#include <cmath>

namespace cgc {

Sweepout latitude_sweepout(const SurfaceModel& surface, int M, int T) {
    if (M < 8 || M % 2 != 0) throw ConfigError("latitude_sweepout: M must be even and >= 8");
    if (T < 2) throw ConfigError("latitude_sweepout: T must be at least 2");
    const Vec3& a = surface.semi_axes();
    Sweepout s;
    s.slices.resize(T + 1);
    for (int i = 0; i <= T; ++i) {
        double phi = M_PI * i / T;
        DiscreteCurve& c = s.slices[i];
        c.nodes.resize(M);
        for (int j = 0; j < M; ++j) {
            double th = 2.0 * M_PI * j / M;
            c.nodes[j] = Vec3(a[0] * std::sin(phi) * std::cos(th),
                              a[1] * std::sin(phi) * std::sin(th), a[2] * std::cos(phi));
        }
    }
    recompute_ledger(surface, s);
    return s;
}

void recompute_ledger(const SurfaceModel& surface, Sweepout& s, const AreaOptions& opts) {
    s.ledger_values.assign(s.slices.size(), 0.0);
    for (size_t i = 0; i + 1 < s.slices.size(); ++i)
        s.ledger_values[i + 1] =
            s.ledger_values[i] + area_increment(surface, s.slices[i], s.slices[i + 1], opts);
}

AdmissibilityReport validate_sweepout(const SurfaceModel& surface, const Sweepout& s,
                                      const AreaOptions& opts) {
    AdmissibilityReport r;
    if (s.slices.size() < 3) {
        r.detail = "fewer than 3 slices";
        return r;
    }
    auto spread = [](const DiscreteCurve& c) {
        double m = 0.0;
        for (const Vec3& p : c.nodes) m = std::max(m, (p - c.nodes[0]).norm());
        return m;
    };
    r.end_spread = std::max(spread(s.slices.front()), spread(s.slices.back()));
    r.ends_constant = r.end_spread < 1e-10;

    r.max_adjacent_gap = 0.0;
    for (size_t i = 0; i + 1 < s.slices.size(); ++i)
        r.max_adjacent_gap = std::max(r.max_adjacent_gap,
                                      sup_distance(s.slices[i], s.slices[i + 1]));
    r.adjacency_ok = r.max_adjacent_gap < 0.5 * surface.tube_radius();

    if (!r.adjacency_ok) {
        r.detail = "adjacent slices too far apart";
        return r;
    }
    try {
        r.degree = sweep_degree(surface, std::span<const DiscreteCurve>(s.slices), opts);
    } catch (const AmbiguousDegree& e) {
        r.detail = e.what();
        return r;
    }
    r.admissible = r.ends_constant && r.adjacency_ok && r.degree.degree == 1;
    if (!r.admissible && r.detail.empty())
        r.detail = !r.ends_constant ? "end slices not constant" : "degree != 1";
    return r;
}

std::vector<double> action_profile(const Sweepout& s, const ActionParams& params) {
    params.validate();
    std::vector<double> profile(s.slices.size());
    for (size_t i = 0; i < s.slices.size(); ++i)
        profile[i] = perturbed_length(s.slices[i], params.eps) +
                     params.kappa * s.ledger_values[i];
    return profile;
}

std::pair<int, double> max_slice(const Sweepout& s, const ActionParams& params) {
    std::vector<double> profile = action_profile(s, params);
    int arg = 0;
    for (size_t i = 1; i < profile.size(); ++i)
        if (profile[i] > profile[arg]) arg = static_cast<int>(i);
    return {arg, profile[arg]};
}

} // namespace cgc
