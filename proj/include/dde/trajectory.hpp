#pragma once

#include <limits>
#include <vector>

#include "dde/params.hpp"
#include "dde/segment.hpp"

namespace dde {

struct TrajectorySample {
    double t = 0.0;
    double u = 0.0;
    // H(u, t) and the first integral F = exp(gamma t) H(u, t); NaN for
    // t < 0, where the window [t - tau, t] is not fully covered.
    double H = std::numeric_limits<double>::quiet_NaN();
    double F = std::numeric_limits<double>::quiet_NaN();
};

/// Solution on [-tau, t_end] at uniform spacing h; the first tau/h + 1
/// samples reproduce the initial segment.
struct Trajectory {
    double h = 0.0;
    double t0 = 0.0;  // = -tau
    std::vector<TrajectorySample> samples;

    double u_at_node(int k) const { return samples[static_cast<std::size_t>(k)].u; }
    double final_u() const { return samples.back().u; }

    // Minimum of u over t >= t_from.
    double min_u(double t_from = 0.0) const;

    // Segment ending at the last sample.
    HistorySegment tail_segment(const Parameters& p) const;
};

}  // namespace dde
