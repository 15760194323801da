#pragma once

#include <string>

#include "cgc/action.hpp"

namespace cgc {

// One-parameter family of closed curves from a point to a point, with the
// accumulated area ledger carried alongside. Admissible sweepouts have
// constant end slices, degree 1, and adjacent slices closer than
// tube_radius/2 in sup norm.
struct Sweepout {
    std::vector<DiscreteCurve> slices;  // T+1 slices, t_i = i/T
    std::vector<double> ledger_values;  // accumulated area from the t=0 end

    int T() const { return static_cast<int>(slices.size()) - 1; }
    int M() const { return slices.empty() ? 0 : slices.front().M(); }
};

// Latitude family of the round sphere (or the componentwise-scaled family on
// an ellipsoid): slice i sits at colatitude pi*i/T, north pole to south pole,
// slices traversed counterclockwise seen from the north. End slices are
// exact point-curves.
Sweepout latitude_sweepout(const SurfaceModel& surface, int M, int T);

// Recompute ledger_values from the t = 0 end.
void recompute_ledger(const SurfaceModel& surface, Sweepout& s, const AreaOptions& opts = {});

struct AdmissibilityReport {
    bool ends_constant = false;
    double end_spread = 0.0;
    DegreeResult degree;
    double max_adjacent_gap = 0.0;
    bool adjacency_ok = false;
    bool admissible = false;
    std::string detail;
};

AdmissibilityReport validate_sweepout(const SurfaceModel& surface, const Sweepout& s,
                                      const AreaOptions& opts = {});

// profile[i] = L_eps(slice_i) + kappa * ledger_values[i].
std::vector<double> action_profile(const Sweepout& s, const ActionParams& params);

// argmax and max of the profile; ties broken by smallest index.
std::pair<int, double> max_slice(const Sweepout& s, const ActionParams& params);

} // namespace cgc
