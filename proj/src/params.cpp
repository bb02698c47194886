#include "dde/params.hpp"

#include <cmath>
#include <string>

#include "dde/errors.hpp"

namespace dde {

void Parameters::validate() const {
    if (!(gamma > 0.0) || !std::isfinite(gamma))
        throw GridError("gamma must be positive and finite, got " + std::to_string(gamma));
    if (!(tau0 > 0.0) || !(tau > tau0) || !std::isfinite(tau))
        throw GridError("delays must satisfy 0 < tau0 < tau, got tau0=" +
                        std::to_string(tau0) + ", tau=" + std::to_string(tau));
}

namespace {

bool near_integer(double x, int& out) {
    double r = std::round(x);
    if (std::abs(x - r) > 1e-9 * std::max(1.0, std::abs(x))) return false;
    out = static_cast<int>(r);
    return true;
}

}  // namespace

Grid Grid::make(const Parameters& p, double h) {
    p.validate();
    if (!(h > 0.0) || !std::isfinite(h))
        throw GridError("grid step must be positive, got " + std::to_string(h));
    Grid g;
    g.h = h;
    if (!near_integer(p.tau0 / h, g.m0) || !near_integer(p.tau / h, g.m))
        throw GridError("grid step " + std::to_string(h) +
                        " is not commensurate with delays tau0=" + std::to_string(p.tau0) +
                        ", tau=" + std::to_string(p.tau));
    g.m1 = g.m - g.m0;
    if (g.m0 < 2 || g.m1 < 2)
        throw GridError("grid too coarse: need at least 2 nodes per delay interval");
    return g;
}

Grid finest_commensurate_grid(const Parameters& p, double h_max, int max_nodes) {
    p.validate();
    if (!(h_max > 0.0)) throw GridError("h_max must be positive");
    int n0 = std::max(2, static_cast<int>(std::ceil(p.tau0 / h_max - 1e-12)));
    for (int n = n0; n <= max_nodes; ++n) {
        int dummy = 0;
        if (near_integer(p.tau * n / p.tau0, dummy))
            return Grid::make(p, p.tau0 / n);
    }
    throw GridError("no commensurate grid step found below h_max");
}

}  // namespace dde
