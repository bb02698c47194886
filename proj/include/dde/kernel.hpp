#pragma once

#include <functional>
#include <span>
#include <vector>

#include "dde/nonlinearity.hpp"
#include "dde/params.hpp"
#include "dde/segment.hpp"

namespace dde {

/// Quadrature weights for the memory integral
///   I(t) = int_{tau0}^{tau} f(u(t - a)) exp(-gamma (a - tau0)) da
/// on the commensurate grid: node j corresponds to a = tau0 + j*h and the
/// weight already carries the exponential kernel factor.
class MemoryKernel {
public:
    MemoryKernel(const Parameters& p, const Grid& g);

    const Grid& grid() const { return grid_; }

    // Weighted sum over cached f values: fvals[idx - m0 - j], j = 0..m1.
    // idx indexes a buffer whose node 0 sits at time t - idx*h; the caller
    // guarantees idx >= m so the whole window is covered.
    double apply(std::span<const double> fvals, std::size_t idx) const;

    // Closed-form upper bound fbar * (1 - exp(-gamma tau1)) / gamma.
    double bound(double fbar) const;

    double kernel_mass() const { return mass_; }  // (1 - exp(-gamma tau1)) / gamma

private:
    Grid grid_;
    std::vector<double> weights_;
    double mass_;
};

/// Time-indexed accessor for u; must cover [t - tau, t - tau0] for the
/// memory integral and [t - tau, t] for H.
using HistoryFn = std::function<double(double)>;

// Memory integral at time t from an arbitrary history accessor. Throws
// CoverageError if the accessor throws for some lookup.
double memory_integral(const HistoryFn& history, double t, const Parameters& p,
                       const Nonlinearity& nl, double h);

// H(u, t) = u(t) - memory integral at t.
double h_functional(const HistoryFn& history, double t, const Parameters& p,
                    const Nonlinearity& nl, double h);

// H0 of a segment: H at t = 0 using only the segment samples.
double h0(const HistorySegment& seg, const Parameters& p, const Nonlinearity& nl);

// Membership tests. The D0 test accepts |H0| <= tol * (1 + sup_norm);
// exact zero is unattainable in floating point.
bool in_D(const HistorySegment& seg, const Parameters& p, const Nonlinearity& nl,
          double tol = 1e-8);
bool in_D0(const HistorySegment& seg, const Parameters& p, const Nonlinearity& nl,
           double tol = 1e-8);

// Constant steady state: the root of u = f(u) * (1 - exp(-gamma tau1)) / gamma,
// located by bisection on [0, fbar * (1 - exp(-gamma tau1)) / gamma].
double steady_state(const Parameters& p, const Nonlinearity& nl, double tol = 1e-13);

}  // namespace dde
