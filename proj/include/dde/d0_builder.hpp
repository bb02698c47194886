#pragma once

#include <cstdint>
#include <vector>

#include "dde/kernel.hpp"
#include "dde/nonlinearity.hpp"
#include "dde/params.hpp"
#include "dde/segment.hpp"

namespace dde {

/// Initial age distribution g on [0, tau], sampled on the commensurate grid;
/// biologically the age profile of cells already in the maturation pipeline.
struct AgeDistribution {
    double h = 0.0;
    std::vector<double> values;  // g(k*h), k = 0..tau/h, all >= 0

    double at_node(int k) const { return values[static_cast<std::size_t>(k)]; }
    // Off-node evaluation by 4-point (cubic) Lagrange interpolation.
    double eval(double s) const;

    void validate(const Parameters& p) const;

    template <class F>
    static AgeDistribution sample(F&& f, const Parameters& p, double h) {
        Grid g = Grid::make(p, h);
        AgeDistribution a;
        a.h = h;
        a.values.resize(static_cast<std::size_t>(g.m) + 1);
        for (int k = 0; k <= g.m; ++k)
            a.values[static_cast<std::size_t>(k)] = f(g.h * k);
        return a;
    }
};

/// The inhomogeneous rate (F_g u)(t) on [-tau, 0]: a three-branch piecewise
/// formula whose branch boundaries at -tau0 and -tau1 are ordered by the
/// sign of tau1 - tau0 (both orderings implemented). u_known must cover
/// [-tau, t - tau0] whenever a branch references u(t - tau0).
double apply_Fg(const AgeDistribution& g, const HistoryFn& u_known, double t,
                const Parameters& p, const Nonlinearity& nl);

/// Solve du/dt = -gamma u + F_g u forward from t = -tau with
/// u(-tau) = int_{tau0}^{tau} g(t) dt, by RK4 with Hermite stage lookups for
/// the delayed self-reference. The result has H0 = 0 up to discretization
/// error. Throws ConstructionFailedError if the result has negative samples
/// (the construction does not guarantee nonnegativity for every g).
HistorySegment build_d0_segment(const AgeDistribution& g, const Parameters& p,
                                const Nonlinearity& nl);

/// Adjust g near t = 0 (additive blend supported on [0, min(tau0, tau/10)])
/// so that g(0) = f(int_{tau0}^{tau} g dt). The blend support never reaches
/// the integration window, so the amplitude is available in closed form.
AgeDistribution enforce_g0(const AgeDistribution& g, const Parameters& p,
                           const Nonlinearity& nl);

/// The constant level c with c = f(c * tau1): g == c satisfies the
/// compatibility condition, and the resulting segment is the constant c*tau1
/// steady profile's D0 representative. Located by bisection on [0, fbar].
double constant_d0_level(const Parameters& p, const Nonlinearity& nl,
                         double tol = 1e-13);

struct GShape {
    int n_modes = 2;
    double amp_lo = 0.0;
    double amp_hi = 0.2;
};

/// Deterministic random age distribution:
///   g(t) = max(0, c* + sum_i a_i cos(2 pi i t / tau) + b_i sin(2 pi i t / tau))
/// with |a_i|, |b_i| drawn uniformly from the amplitude range (random signs)
/// around the compatible constant level c*, then compatibility-fixed.
AgeDistribution random_g(std::uint64_t seed, const Parameters& p, const Nonlinearity& nl,
                         const GShape& shape, double h);

}  // namespace dde
