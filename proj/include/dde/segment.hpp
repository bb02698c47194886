#pragma once

#include <vector>

#include "dde/params.hpp"

namespace dde {

/// A history function on [-tau, 0] sampled at t = -tau + k*h, k = 0..m.
/// The state the segment map T acts on.
struct HistorySegment {
    double h = 0.0;
    std::vector<double> values;

    int node_count() const { return static_cast<int>(values.size()); }
    double front_time() const { return -h * static_cast<double>(values.size() - 1); }
    double at_node(int k) const { return values[static_cast<std::size_t>(k)]; }

    static HistorySegment constant(double level, const Parameters& p, double h);

    // Sample an arbitrary function of t on the grid of (p, h).
    template <class F>
    static HistorySegment sample(F&& f, const Parameters& p, double h) {
        Grid g = Grid::make(p, h);
        HistorySegment seg;
        seg.h = h;
        seg.values.resize(static_cast<std::size_t>(g.m) + 1);
        for (int k = 0; k <= g.m; ++k)
            seg.values[static_cast<std::size_t>(k)] = f(-p.tau + g.h * k);
        return seg;
    }

    // Throws GridError unless the segment matches the grid of (p, h) and all
    // samples are finite.
    void validate(const Parameters& p) const;
};

// sup norm over the segment samples
double sup_norm(const HistorySegment& seg);

// L1 norm: integral of the samples over [-tau, 0] by composite Simpson.
double l1_norm(const HistorySegment& seg);

bool all_nonnegative(const HistorySegment& seg, double tol = 0.0);

}  // namespace dde
