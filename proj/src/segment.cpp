#include "dde/segment.hpp"

#include <cmath>
#include <string>

#include "dde/errors.hpp"
#include "dde/quadrature.hpp"

namespace dde {

HistorySegment HistorySegment::constant(double level, const Parameters& p, double h) {
    return sample([level](double) { return level; }, p, h);
}

void HistorySegment::validate(const Parameters& p) const {
    Grid g = Grid::make(p, h);
    if (static_cast<int>(values.size()) != g.m + 1)
        throw GridError("segment has " + std::to_string(values.size()) +
                        " samples, expected tau/h + 1 = " + std::to_string(g.m + 1));
    for (double v : values)
        if (!std::isfinite(v)) throw GridError("segment contains a non-finite sample");
}

double sup_norm(const HistorySegment& seg) {
    double m = 0.0;
    for (double v : seg.values) m = std::max(m, std::abs(v));
    return m;
}

double l1_norm(const HistorySegment& seg) {
    return simpson_integral(seg.values, seg.h);
}

bool all_nonnegative(const HistorySegment& seg, double tol) {
    for (double v : seg.values)
        if (v < -tol) return false;
    return true;
}

}  // namespace dde
