#include "dde/quadrature.hpp"

#include <stdexcept>

namespace dde {

std::vector<double> simpson_weights(int n_sub, double h) {
    if (n_sub < 2) throw std::invalid_argument("simpson_weights: need >= 2 subintervals");
    int n_simpson = (n_sub % 2 == 0) ? n_sub : n_sub - 1;
    std::vector<double> w(static_cast<std::size_t>(n_sub) + 1, 0.0);
    for (int j = 0; j <= n_simpson; ++j) {
        double c = (j == 0 || j == n_simpson) ? 1.0 : (j % 2 == 1 ? 4.0 : 2.0);
        w[static_cast<std::size_t>(j)] += c * h / 3.0;
    }
    if (n_simpson != n_sub) {
        w[static_cast<std::size_t>(n_sub) - 1] += h / 2.0;
        w[static_cast<std::size_t>(n_sub)] += h / 2.0;
    }
    return w;
}

double simpson_integral(std::span<const double> values, double h) {
    auto w = simpson_weights(static_cast<int>(values.size()) - 1, h);
    double s = 0.0;
    for (std::size_t j = 0; j < values.size(); ++j) s += w[j] * values[j];
    return s;
}

}  // namespace dde
