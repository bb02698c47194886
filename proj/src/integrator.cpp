#include "dde/integrator.hpp"

#include <cmath>
#include <string>

#include "dde/errors.hpp"

namespace dde {

double Trajectory::min_u(double t_from) const {
    double m = std::numeric_limits<double>::infinity();
    for (const auto& s : samples)
        if (s.t >= t_from - 1e-12) m = std::min(m, s.u);
    return m;
}

HistorySegment Trajectory::tail_segment(const Parameters& p) const {
    Grid g = Grid::make(p, h);
    HistorySegment seg;
    seg.h = h;
    seg.values.resize(static_cast<std::size_t>(g.m) + 1);
    std::size_t off = samples.size() - seg.values.size();
    for (std::size_t k = 0; k < seg.values.size(); ++k) seg.values[k] = samples[off + k].u;
    return seg;
}

namespace {

int step_count(double t_end, double h) {
    double n = t_end / h;
    double r = std::round(n);
    if (!(t_end > 0.0) || std::abs(n - r) > 1e-9 * std::max(1.0, n))
        throw GridError("t_end = " + std::to_string(t_end) +
                        " is not a positive multiple of the grid step");
    return static_cast<int>(r);
}

// 4th-order finite-difference derivatives of the history samples.
std::vector<double> history_derivatives(const std::vector<double>& u, double h) {
    std::size_t n = u.size();
    std::vector<double> d(n);
    auto at = [&](std::size_t k) { return u[k]; };
    d[0] = (-25 * at(0) + 48 * at(1) - 36 * at(2) + 16 * at(3) - 3 * at(4)) / (12 * h);
    d[1] = (-3 * at(0) - 10 * at(1) + 18 * at(2) - 6 * at(3) + at(4)) / (12 * h);
    for (std::size_t k = 2; k + 2 < n; ++k)
        d[k] = (at(k - 2) - 8 * at(k - 1) + 8 * at(k + 1) - at(k + 2)) / (12 * h);
    d[n - 2] = (3 * at(n - 1) + 10 * at(n - 2) - 18 * at(n - 3) + 6 * at(n - 4) - at(n - 5)) / (12 * h);
    d[n - 1] = (25 * at(n - 1) - 48 * at(n - 2) + 36 * at(n - 3) - 16 * at(n - 4) + 3 * at(n - 5)) / (12 * h);
    return d;
}

void fill_diagnostics(Trajectory& traj, const std::vector<double>& u,
                      const MemoryKernel& kernel, const Parameters& p,
                      const Nonlinearity& nl) {
    const Grid& g = kernel.grid();
    std::vector<double> fvals(u.size());
    for (std::size_t k = 0; k < u.size(); ++k) fvals[k] = nl(u[k]);
    for (std::size_t k = 0; k < u.size(); ++k) {
        auto& s = traj.samples[k];
        s.t = -p.tau + traj.h * static_cast<double>(k);
        s.u = u[k];
        if (static_cast<int>(k) >= g.m) {
            double t = s.t;
            s.H = u[k] - kernel.apply(fvals, k);
            s.F = std::exp(p.gamma * t) * s.H;
        }
    }
}

}  // namespace

Trajectory integrate_steps(const HistorySegment& phi, const Parameters& p,
                           const Nonlinearity& nl, double t_end) {
    phi.validate(p);
    Grid g = Grid::make(p, phi.h);
    const int n_steps = step_count(t_end, g.h);
    const double h = g.h;
    const double decay = std::exp(-p.gamma * p.tau1());

    std::vector<double> u(phi.values);
    std::vector<double> du = history_derivatives(u, h);
    u.resize(static_cast<std::size_t>(g.m + n_steps) + 1);
    du.resize(u.size());

    auto rhs = [&](double uval, double u_tau0, double u_tau) {
        return -p.gamma * uval + nl(u_tau0) - nl(u_tau) * decay;
    };
    // Right-hand derivative at t = 0 from the equation; phi need not satisfy
    // it, so du[m] keeps the left-limit value for interpolation on [-h, 0].
    double du_right_m = rhs(u[static_cast<std::size_t>(g.m)],
                            u[static_cast<std::size_t>(g.m - g.m0)], u[0]);

    // Hermite value at the midpoint of grid interval [j, j+1].
    auto mid = [&](int j) {
        double dl = (j == g.m) ? du_right_m : du[static_cast<std::size_t>(j)];
        double dr = du[static_cast<std::size_t>(j) + 1];
        return 0.5 * (u[static_cast<std::size_t>(j)] + u[static_cast<std::size_t>(j) + 1]) +
               (h / 8.0) * (dl - dr);
    };

    for (int n = 0; n < n_steps; ++n) {
        const std::size_t G = static_cast<std::size_t>(g.m + n);
        const double un = u[G];
        const double k1 = (n == 0) ? du_right_m : du[G];
        const double um_tau0 = mid(static_cast<int>(G) - g.m0);
        const double um_tau = mid(static_cast<int>(G) - g.m);
        const double k2 = rhs(un + 0.5 * h * k1, um_tau0, um_tau);
        const double k3 = rhs(un + 0.5 * h * k2, um_tau0, um_tau);
        const double u1_tau0 = u[G + 1 - static_cast<std::size_t>(g.m0)];
        const double u1_tau = u[G + 1 - static_cast<std::size_t>(g.m)];
        const double k4 = rhs(un + h * k3, u1_tau0, u1_tau);
        const double next = un + (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
        if (!std::isfinite(next))
            throw BlowUpError("non-finite state in method of steps at t = " +
                                  std::to_string(h * (n + 1)),
                              h * (n + 1));
        u[G + 1] = next;
        du[G + 1] = rhs(next, u1_tau0, u1_tau);
    }

    Trajectory traj;
    traj.h = h;
    traj.t0 = -p.tau;
    traj.samples.resize(u.size());
    MemoryKernel kernel(p, g);
    fill_diagnostics(traj, u, kernel, p, nl);
    return traj;
}

namespace {

// Shared renewal march: appends n_steps values to u (and their f values to
// fvals), starting from a filled window of at least m + 1 nodes whose last
// entry sits at time t_start.
void march_renewal(std::vector<double>& u, std::vector<double>& fvals, double H0,
                   double t_start, int n_steps, const MemoryKernel& kernel,
                   const Parameters& p, const Nonlinearity& nl) {
    const Grid& g = kernel.grid();
    std::size_t base = u.size() - 1;
    u.resize(u.size() + static_cast<std::size_t>(n_steps));
    fvals.resize(u.size());
    for (int n = 1; n <= n_steps; ++n) {
        std::size_t idx = base + static_cast<std::size_t>(n);
        double t = t_start + g.h * n;
        double val = std::exp(-p.gamma * t) * H0 + kernel.apply(fvals, idx);
        if (!std::isfinite(val))
            throw BlowUpError("non-finite state in renewal march at t = " + std::to_string(t), t);
        u[idx] = val;
        fvals[idx] = nl(val);
    }
}

}  // namespace

Trajectory integrate_renewal(const HistorySegment& phi, const Parameters& p,
                             const Nonlinearity& nl, double t_end) {
    phi.validate(p);
    Grid g = Grid::make(p, phi.h);
    const int n_steps = step_count(t_end, g.h);
    MemoryKernel kernel(p, g);

    std::vector<double> u(phi.values);
    std::vector<double> fvals(u.size());
    for (std::size_t k = 0; k < u.size(); ++k) fvals[k] = nl(u[k]);
    double H0 = u.back() - kernel.apply(fvals, static_cast<std::size_t>(g.m));
    march_renewal(u, fvals, H0, 0.0, n_steps, kernel, p, nl);

    Trajectory traj;
    traj.h = g.h;
    traj.t0 = -p.tau;
    traj.samples.resize(u.size());
    fill_diagnostics(traj, u, kernel, p, nl);
    return traj;
}

HistorySegment apply_T(const HistorySegment& seg, const Parameters& p,
                       const Nonlinearity& nl) {
    seg.validate(p);
    Grid g = Grid::make(p, seg.h);
    MemoryKernel kernel(p, g);

    std::vector<double> u(seg.values);
    std::vector<double> fvals(u.size());
    for (std::size_t k = 0; k < u.size(); ++k) fvals[k] = nl(u[k]);
    double H0 = u.back() - kernel.apply(fvals, static_cast<std::size_t>(g.m));
    march_renewal(u, fvals, H0, 0.0, g.m, kernel, p, nl);

    HistorySegment out;
    out.h = seg.h;
    // (Tu)(-tau) = u(0): the window starts at the old endpoint, untouched by
    // the march.
    out.values.assign(u.begin() + g.m, u.end());
    return out;
}

std::vector<HistorySegment> iterate_T(const HistorySegment& u0, int n,
                                      const Parameters& p, const Nonlinearity& nl,
                                      int n_keep) {
    u0.validate(p);
    if (!in_D(u0, p, nl))
        throw AdmissibilityError("initial segment is outside D (H0 < 0 or negative samples); "
                                 "positivity of the iterates is not guaranteed");
    if (n < 0) throw std::invalid_argument("iterate_T: n must be >= 0");
    const int keep = (n_keep <= 0 || n_keep > n) ? n : n_keep;

    std::vector<HistorySegment> ring(static_cast<std::size_t>(keep));
    HistorySegment cur = u0;
    for (int k = 0; k < n; ++k) {
        cur = apply_T(cur, p, nl);
        ring[static_cast<std::size_t>(k % keep)] = cur;
    }
    // Unroll the ring so the result is ordered oldest to newest.
    std::vector<HistorySegment> out;
    out.reserve(static_cast<std::size_t>(keep));
    if (n == 0) return out;
    for (int k = 0; k < keep; ++k)
        out.push_back(std::move(ring[static_cast<std::size_t>((n - keep + k) % keep)]));
    return out;
}

}  // namespace dde
