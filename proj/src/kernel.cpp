#include "dde/kernel.hpp"

#include <cmath>
#include <stdexcept>

#include "dde/errors.hpp"
#include "dde/quadrature.hpp"

namespace dde {

MemoryKernel::MemoryKernel(const Parameters& p, const Grid& g) : grid_(g) {
    weights_ = simpson_weights(g.m1, g.h);
    for (int j = 0; j <= g.m1; ++j)
        weights_[static_cast<std::size_t>(j)] *= std::exp(-p.gamma * g.h * j);
    mass_ = (1.0 - std::exp(-p.gamma * p.tau1())) / p.gamma;
}

double MemoryKernel::apply(std::span<const double> fvals, std::size_t idx) const {
    double s = 0.0;
    std::size_t base = idx - static_cast<std::size_t>(grid_.m0);
    for (int j = 0; j <= grid_.m1; ++j)
        s += weights_[static_cast<std::size_t>(j)] * fvals[base - static_cast<std::size_t>(j)];
    return s;
}

double MemoryKernel::bound(double fbar) const { return fbar * mass_; }

double memory_integral(const HistoryFn& history, double t, const Parameters& p,
                       const Nonlinearity& nl, double h) {
    Grid g = Grid::make(p, h);
    MemoryKernel kernel(p, g);
    std::vector<double> fvals(static_cast<std::size_t>(g.m) + 1, 0.0);
    // Only the window [t - tau, t - tau0] is read by apply().
    for (int j = 0; j <= g.m1; ++j) {
        double s = t - p.tau0 - g.h * j;
        double u;
        try {
            u = history(s);
        } catch (const std::exception& e) {
            throw CoverageError("history lookup failed at t = " + std::to_string(s) +
                                ": " + e.what());
        }
        if (!std::isfinite(u))
            throw CoverageError("history not covering t = " + std::to_string(s));
        fvals[static_cast<std::size_t>(g.m - g.m0 - j)] = nl(u);
    }
    return kernel.apply(fvals, static_cast<std::size_t>(g.m));
}

double h_functional(const HistoryFn& history, double t, const Parameters& p,
                    const Nonlinearity& nl, double h) {
    double ut = history(t);
    if (!std::isfinite(ut))
        throw CoverageError("history not covering t = " + std::to_string(t));
    return ut - memory_integral(history, t, p, nl, h);
}

double h0(const HistorySegment& seg, const Parameters& p, const Nonlinearity& nl) {
    seg.validate(p);
    Grid g = Grid::make(p, seg.h);
    MemoryKernel kernel(p, g);
    std::vector<double> fvals(seg.values.size());
    for (std::size_t k = 0; k < seg.values.size(); ++k) fvals[k] = nl(seg.values[k]);
    return seg.values.back() - kernel.apply(fvals, static_cast<std::size_t>(g.m));
}

bool in_D(const HistorySegment& seg, const Parameters& p, const Nonlinearity& nl,
          double tol) {
    if (!all_nonnegative(seg)) return false;
    return h0(seg, p, nl) >= -tol * (1.0 + sup_norm(seg));
}

bool in_D0(const HistorySegment& seg, const Parameters& p, const Nonlinearity& nl,
           double tol) {
    if (!all_nonnegative(seg)) return false;
    return std::abs(h0(seg, p, nl)) <= tol * (1.0 + sup_norm(seg));
}

double steady_state(const Parameters& p, const Nonlinearity& nl, double tol) {
    p.validate();
    double mass = (1.0 - std::exp(-p.gamma * p.tau1())) / p.gamma;
    double lo = 0.0, hi = nl.fbar * mass;
    auto residual = [&](double u) { return u - nl(u) * mass; };
    if (hi == 0.0) return 0.0;
    double flo = residual(lo);
    if (flo >= 0.0) return lo;  // f(0) = 0: zero is the steady state
    for (int it = 0; it < 200 && hi - lo > tol * (1.0 + hi); ++it) {
        double mid = 0.5 * (lo + hi);
        (residual(mid) < 0.0 ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

}  // namespace dde
