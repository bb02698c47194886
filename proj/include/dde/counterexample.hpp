#pragma once

#include <optional>

#include "dde/nonlinearity.hpp"
#include "dde/params.hpp"
#include "dde/trajectory.hpp"

namespace dde {

/// Sharpness counterexample: the constant initial level phi0 has H0 = -eps
/// under the Gaussian-bump feedback, and the solution crosses zero before
/// t = tau once the bump is narrow enough.
struct CounterexampleSpec {
    double phi0 = 1.0;     // constant initial level, > 0
    double epsilon = 1.0;  // H0 deficit, > 0
    double delta = 0.005;  // bump width^2, > 0
    Parameters p{1.0, 0.1, 1.0};

    // Bump amplitude A = gamma (phi0 + eps) / (1 - exp(-gamma tau1)).
    double amplitude() const;
    void validate() const;
};

// The bump nonlinearity f_delta(u) = A exp(-(u - phi0)^2 / delta), fbar = A.
Nonlinearity make_fdelta(const CounterexampleSpec& spec);

/// Piecewise analytic limit solution of the delta -> 0 dynamics on [0, tau]:
///   u0(t) = phi0 + eps (1 - exp(-gamma t))                      on [0, tau0],
///   u0(t) = -eps exp(-gamma t)
///           + (A/gamma)(exp(-gamma (t-tau0)) - exp(-gamma tau1)) on (tau0, tau],
/// continuous at tau0 and strictly decreasing on the second branch, ending at
/// u0(tau) = -eps exp(-gamma tau) < 0. Throws std::domain_error outside [0, tau].
double limit_u0(double t, const CounterexampleSpec& spec);

struct CounterexampleRun {
    Trajectory trajectory;
    std::optional<double> first_negative_time;  // first grid time with u < 0
    double u_at_tau = 0.0;
    double u0_at_tau = 0.0;  // analytic limit value for comparison
};

// Integrate the bump dynamics from the constant segment phi0 by the method
// of steps, at a step fine enough to resolve the bump (h <= min(tau0/20,
// sqrt(delta)/10), rounded down to a commensurate value).
CounterexampleRun run_counterexample(const CounterexampleSpec& spec, double t_end = 0.0);

}  // namespace dde
