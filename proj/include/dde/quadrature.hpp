#pragma once

#include <span>
#include <vector>

namespace dde {

// Composite Simpson weights for n_sub subintervals of width h.
// If n_sub is odd, Simpson covers the first n_sub - 1 subintervals and the
// terminal subinterval is closed with the trapezoid rule.
std::vector<double> simpson_weights(int n_sub, double h);

// Integral of uniformly sampled values (n_sub = values.size() - 1).
double simpson_integral(std::span<const double> values, double h);

}  // namespace dde
