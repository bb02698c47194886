#include "dde/counterexample.hpp"

#include <cmath>
#include <stdexcept>

#include "dde/errors.hpp"
#include "dde/integrator.hpp"

namespace dde {

double CounterexampleSpec::amplitude() const {
    return p.gamma * (phi0 + epsilon) / (1.0 - std::exp(-p.gamma * p.tau1()));
}

void CounterexampleSpec::validate() const {
    p.validate();
    if (!(phi0 > 0.0) || !(epsilon > 0.0) || !(delta > 0.0))
        throw std::invalid_argument("counterexample needs phi0 > 0, epsilon > 0, delta > 0");
}

Nonlinearity make_fdelta(const CounterexampleSpec& spec) {
    spec.validate();
    return Nonlinearity::gaussian_bump(spec.amplitude(), spec.phi0, spec.delta);
}

double limit_u0(double t, const CounterexampleSpec& spec) {
    spec.validate();
    const Parameters& p = spec.p;
    if (t < -1e-12 || t > p.tau + 1e-12)
        throw std::domain_error("limit_u0: t outside [0, tau]");
    if (t <= p.tau0)
        return spec.phi0 + spec.epsilon * (1.0 - std::exp(-p.gamma * t));
    double A = spec.amplitude();
    return -spec.epsilon * std::exp(-p.gamma * t) +
           (A / p.gamma) * (std::exp(-p.gamma * (t - p.tau0)) - std::exp(-p.gamma * p.tau1()));
}

CounterexampleRun run_counterexample(const CounterexampleSpec& spec, double t_end) {
    spec.validate();
    const Parameters& p = spec.p;
    if (t_end <= 0.0) t_end = p.tau;
    // The bump must be resolved by the step: h <= sqrt(delta)/10.
    double h_max = std::min(p.tau0 / 20.0, std::sqrt(spec.delta) / 10.0);
    Grid g = finest_commensurate_grid(p, h_max);
    // Round t_end up to a grid multiple.
    int n = static_cast<int>(std::ceil(t_end / g.h - 1e-9));
    t_end = g.h * n;

    Nonlinearity fdelta = make_fdelta(spec);
    HistorySegment phi = HistorySegment::constant(spec.phi0, p, g.h);
    CounterexampleRun run;
    run.trajectory = integrate_steps(phi, p, fdelta, t_end);
    for (const auto& s : run.trajectory.samples) {
        if (s.t > 0.0 && s.u < 0.0) {
            run.first_negative_time = s.t;
            break;
        }
    }
    int k_tau = static_cast<int>(std::llround((p.tau - run.trajectory.t0) / g.h));
    run.u_at_tau = run.trajectory.u_at_node(k_tau);
    run.u0_at_tau = limit_u0(p.tau, spec);
    return run;
}

}  // namespace dde
