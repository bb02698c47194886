#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "dde/counterexample.hpp"
#include "dde/errors.hpp"
#include "dde/kernel.hpp"
#include "dde/segment.hpp"

using namespace dde;

TEST_CASE("bump amplitude closed form") {
    CounterexampleSpec spec;
    double want = spec.p.gamma * (spec.phi0 + spec.epsilon) /
                  (1.0 - std::exp(-spec.p.gamma * spec.p.tau1()));
    CHECK(spec.amplitude() == doctest::Approx(want).epsilon(1e-15));
    CHECK(spec.amplitude() == doctest::Approx(3.37024).epsilon(1e-5));
}

TEST_CASE("spec validation") {
    CounterexampleSpec bad;
    bad.phi0 = 0.0;
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
    bad = CounterexampleSpec{};
    bad.delta = -1.0;
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
    bad = CounterexampleSpec{};
    bad.epsilon = 0.0;
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
    CHECK_NOTHROW(CounterexampleSpec{}.validate());
}

TEST_CASE("bump nonlinearity peaks at phi0 with height A") {
    CounterexampleSpec spec;
    auto f = make_fdelta(spec);
    double A = spec.amplitude();
    CHECK(f.fbar == doctest::Approx(A));
    CHECK(eval_f(f, spec.phi0) == doctest::Approx(A));
    CHECK(eval_f(f, spec.phi0 + 10.0) <= A * 1e-8);
    CHECK(eval_f(f, 0.0) <= A * std::exp(-spec.phi0 * spec.phi0 / spec.delta) * (1 + 1e-12));
}

TEST_CASE("the constant initial level has H0 = -epsilon") {
    CounterexampleSpec spec;
    auto f = make_fdelta(spec);
    auto phi = HistorySegment::constant(spec.phi0, spec.p, 0.005);
    // f(phi0) = A exactly, so the memory integral is A * kernel mass = phi0 + eps
    CHECK(h0(phi, spec.p, f) == doctest::Approx(-spec.epsilon).epsilon(1e-10));
    CHECK_FALSE(in_D(phi, spec.p, f));
}

TEST_CASE("analytic limit solution: boundary values, continuity, monotone drop") {
    CounterexampleSpec spec;
    CHECK(limit_u0(0.0, spec) == doctest::Approx(spec.phi0));
    CHECK(limit_u0(spec.p.tau, spec) ==
          doctest::Approx(-spec.epsilon * std::exp(-spec.p.gamma * spec.p.tau)).epsilon(1e-14));
    double lo = limit_u0(spec.p.tau0 - 1e-10, spec);
    double hi = limit_u0(spec.p.tau0 + 1e-10, spec);
    CHECK(std::abs(hi - lo) <= 1e-8);
    double prev = limit_u0(spec.p.tau0 + 1e-6, spec);
    for (int k = 1; k <= 50; ++k) {
        double t = spec.p.tau0 + (spec.p.tau - spec.p.tau0) * k / 50.0;
        double v = limit_u0(t, spec);
        CHECK(v < prev);
        prev = v;
    }
    CHECK_THROWS_AS(limit_u0(-0.1, spec), std::domain_error);
    CHECK_THROWS_AS(limit_u0(1.5, spec), std::domain_error);
}

TEST_CASE("the bump run goes negative before t = tau") {
    CounterexampleSpec spec;  // the published parameter set
    CounterexampleRun run = run_counterexample(spec);
    REQUIRE(run.first_negative_time.has_value());
    CHECK(*run.first_negative_time > 0.0);
    CHECK(*run.first_negative_time < spec.p.tau);
    CHECK(run.u_at_tau < 0.0);
    CHECK(run.u0_at_tau == doctest::Approx(-std::exp(-1.0)).epsilon(1e-12));
}

TEST_CASE("u_delta(tau) approaches the analytic limit as delta -> 0") {
    // O(sqrt(delta)) rate: the bump transit contributes ~A sqrt(pi delta)
    double prev_gap = std::numeric_limits<double>::infinity();
    for (double delta : {0.02, 0.01, 0.005, 0.0025, 0.0003}) {
        CounterexampleSpec spec;
        spec.delta = delta;
        CounterexampleRun run = run_counterexample(spec);
        double gap = std::abs(run.u_at_tau - run.u0_at_tau);
        CHECK(gap < prev_gap);
        prev_gap = gap;
    }
    CHECK(prev_gap <= 0.05);
}

TEST_CASE("wide bumps do not go negative") {
    CounterexampleSpec spec;
    spec.delta = 5.0;  // wide bump: feedback stays active, no sharp shut-off
    CounterexampleRun run = run_counterexample(spec);
    CHECK_FALSE(run.first_negative_time.has_value());
}

TEST_CASE("a larger H0 deficit drives u(tau) further negative") {
    CounterexampleSpec base;
    CounterexampleSpec big;
    big.epsilon = 10.0;
    auto a = run_counterexample(base);
    auto b = run_counterexample(big);
    CHECK(b.u_at_tau < 0.0);
    CHECK(b.u_at_tau < a.u_at_tau);
}
