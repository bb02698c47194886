#include "dde/d0_builder.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <string>

#include "dde/errors.hpp"
#include "dde/quadrature.hpp"

namespace dde {

double AgeDistribution::eval(double s) const {
    const int m = static_cast<int>(values.size()) - 1;
    double x = s / h;
    double r = std::round(x);
    if (std::abs(x - r) < 1e-9) {
        int k = std::clamp(static_cast<int>(r), 0, m);
        return values[static_cast<std::size_t>(k)];
    }
    int i = std::clamp(static_cast<int>(std::floor(x)) - 1, 0, m - 3);
    double acc = 0.0;
    for (int a = 0; a < 4; ++a) {
        double w = 1.0;
        for (int b = 0; b < 4; ++b)
            if (b != a) w *= (x - (i + b)) / static_cast<double>(a - b);
        acc += w * values[static_cast<std::size_t>(i + a)];
    }
    return acc;
}

void AgeDistribution::validate(const Parameters& p) const {
    Grid g = Grid::make(p, h);
    if (static_cast<int>(values.size()) != g.m + 1)
        throw GridError("age distribution has " + std::to_string(values.size()) +
                        " samples, expected tau/h + 1 = " + std::to_string(g.m + 1));
    for (double v : values)
        if (!std::isfinite(v) || v < 0.0)
            throw GridError("age distribution samples must be finite and >= 0");
}

double apply_Fg(const AgeDistribution& g, const HistoryFn& u_known, double t,
                const Parameters& p, const Nonlinearity& nl) {
    g.validate(p);
    const double tau0 = p.tau0, tau1 = p.tau1(), tau = p.tau;
    if (t < -tau - 1e-12 || t > 1e-12)
        throw std::domain_error("apply_Fg: t outside [-tau, 0]");
    auto f_delayed = [&](double tt) { return nl(u_known(tt - tau0)); };
    if (tau1 >= tau0) {
        if (t > -tau0)
            return f_delayed(t) - g.eval(-t) * std::exp(-p.gamma * tau1);
        if (t > -tau1)
            return f_delayed(t) - g.eval(-t) * std::exp(-p.gamma * (t + tau));
        return g.eval(-(t + tau1)) - g.eval(-t) * std::exp(-p.gamma * (t + tau));
    }
    if (t > -tau1)
        return f_delayed(t) - g.eval(-t) * std::exp(-p.gamma * tau1);
    if (t > -tau0)
        return g.eval(-(t + tau1)) - g.eval(-t) * std::exp(-p.gamma * tau1);
    return g.eval(-(t + tau1)) - g.eval(-t) * std::exp(-p.gamma * (t + tau));
}

namespace {

// Branch selection on the commensurate grid, by node index n (t = -tau + n h)
// or interval midpoint (half = true, t = -tau + (n + 1/2) h). Branches are
// upper-closed as printed, and index comparisons avoid floating boundary
// classification.
enum class Branch { FNear, FMid, GOnly };  // phi1 naming: branches 1, 2, 3

Branch classify(const Grid& g, bool tau1_ge_tau0, int n, bool half) {
    if (tau1_ge_tau0) {
        if (half ? (n >= g.m1) : (n > g.m1)) return Branch::FNear;
        if (half ? (n >= g.m0) : (n > g.m0)) return Branch::FMid;
        return Branch::GOnly;
    }
    if (half ? (n >= g.m0) : (n > g.m0)) return Branch::FNear;
    if (half ? (n >= g.m1) : (n > g.m1)) return Branch::FMid;
    return Branch::GOnly;
}

}  // namespace

HistorySegment build_d0_segment(const AgeDistribution& gdist, const Parameters& p,
                                const Nonlinearity& nl) {
    gdist.validate(p);
    Grid g = Grid::make(p, gdist.h);
    const double h = g.h;
    const bool order1 = p.tau1() >= p.tau0;
    const double e_tau1 = std::exp(-p.gamma * p.tau1());

    std::vector<double> u(static_cast<std::size_t>(g.m) + 1);
    std::vector<double> du(u.size());

    // u(-tau) = int_{tau0}^{tau} g(t) dt
    u[0] = simpson_integral(std::span<const double>(gdist.values).subspan(
                                static_cast<std::size_t>(g.m0)),
                            h);

    // Delayed self-reference u(t - tau0) at a node (k = n - m0) or at the
    // midpoint of interval [k, k+1] by cubic Hermite.
    auto u_delayed = [&](int n, bool half) {
        int k = n - g.m0;
        if (!half) return u[static_cast<std::size_t>(k)];
        return 0.5 * (u[static_cast<std::size_t>(k)] + u[static_cast<std::size_t>(k) + 1]) +
               (h / 8.0) * (du[static_cast<std::size_t>(k)] - du[static_cast<std::size_t>(k) + 1]);
    };

    auto fg = [&](int n, bool half) {
        double t = -p.tau + h * (half ? n + 0.5 : n);
        switch (classify(g, order1, n, half)) {
            case Branch::FNear:
                return nl(u_delayed(n, half)) - gdist.eval(-t) * e_tau1;
            case Branch::FMid:
                if (order1)
                    return nl(u_delayed(n, half)) -
                           gdist.eval(-t) * std::exp(-p.gamma * (t + p.tau));
                return gdist.eval(-(t + p.tau1())) - gdist.eval(-t) * e_tau1;
            case Branch::GOnly:
                return gdist.eval(-(t + p.tau1())) -
                       gdist.eval(-t) * std::exp(-p.gamma * (t + p.tau));
        }
        return 0.0;
    };

    du[0] = -p.gamma * u[0] + fg(0, false);
    for (int n = 0; n < g.m; ++n) {
        const std::size_t i = static_cast<std::size_t>(n);
        const double un = u[i];
        const double fg_half = fg(n, true);
        const double fg_next = fg(n + 1, false);
        const double k1 = du[i];
        const double k2 = -p.gamma * (un + 0.5 * h * k1) + fg_half;
        const double k3 = -p.gamma * (un + 0.5 * h * k2) + fg_half;
        const double k4 = -p.gamma * (un + h * k3) + fg_next;
        const double next = un + (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
        if (!std::isfinite(next))
            throw BlowUpError("non-finite state in D0 construction at t = " +
                                  std::to_string(-p.tau + h * (n + 1)),
                              -p.tau + h * (n + 1));
        u[i + 1] = next;
        du[i + 1] = -p.gamma * next + fg_next;
    }

    HistorySegment seg;
    seg.h = h;
    seg.values = std::move(u);
    for (std::size_t k = 0; k < seg.values.size(); ++k) {
        if (seg.values[k] < 0.0)
            throw ConstructionFailedError(
                "D0 construction produced a negative sample u(" +
                std::to_string(-p.tau + h * static_cast<double>(k)) + ") = " +
                std::to_string(seg.values[k]) +
                "; this age distribution does not yield a nonnegative segment");
    }
    return seg;
}

AgeDistribution enforce_g0(const AgeDistribution& g, const Parameters& p,
                           const Nonlinearity& nl) {
    g.validate(p);
    Grid grid = Grid::make(p, g.h);
    double integral = simpson_integral(
        std::span<const double>(g.values).subspan(static_cast<std::size_t>(grid.m0)), g.h);
    double target = nl(integral);
    double c = target - g.values.front();
    if (c == 0.0) return g;

    // The blend lives on [0, tau_blend] with tau_blend <= tau0, strictly
    // below the integration window [tau0, tau], so the fixed point is exact.
    // Quartic taper: C^3 at tau_blend, keeping the construction's O(h^4)
    // accuracy (a linear hat costs two orders through its corner).
    double tau_blend = std::min(p.tau0, p.tau / 10.0);
    AgeDistribution out = g;
    for (std::size_t k = 0; k < out.values.size(); ++k) {
        double t = g.h * static_cast<double>(k);
        double x = 1.0 - t / tau_blend;
        double b = (x > 0.0) ? x * x * x * x : 0.0;
        out.values[k] = std::max(0.0, g.values[k] + c * b);
    }
    out.values.front() = target;
    return out;
}

double constant_d0_level(const Parameters& p, const Nonlinearity& nl, double tol) {
    p.validate();
    if (nl.fbar == 0.0) return 0.0;
    auto residual = [&](double c) { return c - nl(c * p.tau1()); };
    double lo = 0.0, hi = nl.fbar;
    if (residual(lo) >= 0.0) return lo;
    for (int it = 0; it < 200 && hi - lo > tol * (1.0 + hi); ++it) {
        double mid = 0.5 * (lo + hi);
        (residual(mid) < 0.0 ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

AgeDistribution random_g(std::uint64_t seed, const Parameters& p, const Nonlinearity& nl,
                         const GShape& shape, double h) {
    Grid grid = Grid::make(p, h);
    (void)grid;
    std::mt19937_64 rng(seed);
    auto uniform = [&](double lo, double hi) {
        // 53-bit mantissa draw; avoids distribution-implementation variance
        double x = static_cast<double>(rng() >> 11) * 0x1.0p-53;
        return lo + x * (hi - lo);
    };
    double base = constant_d0_level(p, nl);
    std::vector<double> ac(static_cast<std::size_t>(shape.n_modes));
    std::vector<double> bc(static_cast<std::size_t>(shape.n_modes));
    for (int i = 0; i < shape.n_modes; ++i) {
        double sa = (rng() & 1) ? 1.0 : -1.0;
        double sb = (rng() & 1) ? 1.0 : -1.0;
        ac[static_cast<std::size_t>(i)] = sa * uniform(shape.amp_lo, shape.amp_hi);
        bc[static_cast<std::size_t>(i)] = sb * uniform(shape.amp_lo, shape.amp_hi);
    }
    AgeDistribution g = AgeDistribution::sample(
        [&](double t) {
            double v = base;
            for (int i = 0; i < shape.n_modes; ++i) {
                double w = 2.0 * std::numbers::pi * (i + 1) * t / p.tau;
                v += ac[static_cast<std::size_t>(i)] * std::cos(w) +
                     bc[static_cast<std::size_t>(i)] * std::sin(w);
            }
            return std::max(0.0, v);
        },
        p, h);
    return enforce_g0(g, p, nl);
}

}  // namespace dde
