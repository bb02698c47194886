// Command-line front end: simulation, H0 certification, D0 construction,
// the sharpness counterexample, the omega-limit sweep, and the convergence
// study. JSON configs in, CSV data out.

#include <cmath>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "dde/counterexample.hpp"
#include "dde/d0_builder.hpp"
#include "dde/errors.hpp"
#include "dde/integrator.hpp"
#include "dde/io.hpp"
#include "dde/kernel.hpp"
#include "dde/segment.hpp"
#include "dde/studies.hpp"
#include "dde/sweep.hpp"

namespace {

using dde::io::json;

constexpr int kExitConfig = 1;
constexpr int kExitNotInD = 2;
constexpr int kExitConstruction = 3;

dde::GShape shape_from_json(const json& j) {
    dde::GShape s;
    s.n_modes = j.value("n_modes", s.n_modes);
    s.amp_lo = j.value("amp_lo", s.amp_lo);
    s.amp_hi = j.value("amp_hi", s.amp_hi);
    return s;
}

dde::HistorySegment initial_segment(const json& cfg, const dde::Parameters& p,
                                    const dde::Nonlinearity& nl, double h) {
    const json& init = cfg.at("initial");
    const std::string type = init.at("type").get<std::string>();
    if (type == "constant")
        return dde::HistorySegment::constant(init.at("value").get<double>(), p, h);
    if (type == "csv") {
        auto seg = dde::io::read_segment_csv(init.at("path").get<std::string>());
        seg.validate(p);
        return seg;
    }
    if (type == "steady-state")
        return dde::HistorySegment::constant(dde::steady_state(p, nl), p, h);
    if (type == "d0-random") {
        dde::GShape shape;
        if (init.contains("shape")) shape = shape_from_json(init.at("shape"));
        auto g = dde::random_g(init.value("seed", std::uint64_t{0}), p, nl, shape, h);
        return dde::build_d0_segment(g, p, nl);
    }
    throw std::runtime_error("unknown initial segment type: " + type);
}

int cmd_simulate(const std::string& config_path, const std::string& out_path) {
    json cfg = dde::io::load_json(config_path);
    dde::Parameters p = dde::io::params_from_json(cfg.at("params"));
    dde::Nonlinearity nl = dde::io::nonlinearity_from_json(cfg.at("nonlinearity"));
    double h = cfg.at("h").get<double>();
    double t_end = cfg.at("t_end").get<double>();
    std::string scheme = cfg.value("scheme", std::string("steps"));
    dde::HistorySegment phi = initial_segment(cfg, p, nl, h);

    dde::Trajectory traj = (scheme == "renewal") ? dde::integrate_renewal(phi, p, nl, t_end)
                           : (scheme == "steps")
                               ? dde::integrate_steps(phi, p, nl, t_end)
                               : throw std::runtime_error("unknown scheme: " + scheme);
    dde::io::write_trajectory_csv(out_path, traj, cfg);
    std::cout << "wrote " << out_path << " (" << traj.samples.size() << " samples, min u = "
              << dde::io::format_double(traj.min_u()) << ")\n";
    return 0;
}

int cmd_check_h0(const std::string& config_path, const std::string& in_path, double tol) {
    json cfg = dde::io::load_json(config_path);
    dde::Parameters p = dde::io::params_from_json(cfg.at("params"));
    dde::Nonlinearity nl = dde::io::nonlinearity_from_json(cfg.at("nonlinearity"));
    dde::HistorySegment seg = dde::io::read_segment_csv(in_path);
    seg.validate(p);
    double H0 = dde::h0(seg, p, nl);
    bool nonneg = dde::all_nonnegative(seg);
    bool inD = nonneg && H0 >= -tol * (1.0 + dde::sup_norm(seg));
    bool inD0 = nonneg && std::abs(H0) <= tol * (1.0 + dde::sup_norm(seg));
    std::cout << "H0 = " << dde::io::format_double(H0) << "\n";
    if (!nonneg) std::cout << "segment has negative samples\n";
    std::cout << "verdict: " << (inD0 ? "in D0" : inD ? "in D" : "not in D") << "\n";
    return inD ? 0 : kExitNotInD;
}

int cmd_build_init(const std::string& config_path, const std::string& out_path,
                   std::optional<std::uint64_t> seed_override, double tol) {
    json cfg = dde::io::load_json(config_path);
    dde::Parameters p = dde::io::params_from_json(cfg.at("params"));
    dde::Nonlinearity nl = dde::io::nonlinearity_from_json(cfg.at("nonlinearity"));
    double h = cfg.at("h").get<double>();

    dde::AgeDistribution g;
    const json& gspec = cfg.at("g");
    const std::string type = gspec.at("type").get<std::string>();
    if (type == "random") {
        dde::GShape shape;
        if (gspec.contains("shape")) shape = shape_from_json(gspec.at("shape"));
        std::uint64_t seed = seed_override.value_or(gspec.value("seed", std::uint64_t{0}));
        g = dde::random_g(seed, p, nl, shape, h);
    } else if (type == "constant") {
        double level = gspec.value("level", dde::constant_d0_level(p, nl));
        g = dde::AgeDistribution::sample([level](double) { return level; }, p, h);
        g = dde::enforce_g0(g, p, nl);
    } else if (type == "csv") {
        auto seg = dde::io::read_segment_csv(gspec.at("path").get<std::string>());
        g.h = seg.h;
        // age CSV is stored over [-tau, 0] like a segment; reinterpret on [0, tau]
        g.values = seg.values;
        g.validate(p);
        g = dde::enforce_g0(g, p, nl);
    } else {
        throw std::runtime_error("unknown g spec type: " + type);
    }

    dde::HistorySegment seg;
    try {
        seg = dde::build_d0_segment(g, p, nl);
    } catch (const dde::ConstructionFailedError& e) {
        std::cerr << "construction failed: " << e.what() << "\n";
        return kExitConstruction;
    }
    double H0 = dde::h0(seg, p, nl);
    if (std::abs(H0) > tol * (1.0 + dde::sup_norm(seg))) {
        std::cerr << "construction failed certification: |H0| = "
                  << dde::io::format_double(std::abs(H0)) << " exceeds tolerance\n";
        return kExitConstruction;
    }
    dde::io::write_segment_csv(out_path, seg, p, cfg);
    std::cout << "wrote " << out_path << " (H0 = " << dde::io::format_double(H0) << ")\n";
    return 0;
}

int cmd_counterexample(const std::string& config_path, const std::string& out_path) {
    json cfg = dde::io::load_json(config_path);
    dde::CounterexampleSpec spec = dde::io::counterexample_from_json(cfg);
    dde::CounterexampleRun run = dde::run_counterexample(spec, cfg.value("t_end", 0.0));
    if (!out_path.empty()) dde::io::write_trajectory_csv(out_path, run.trajectory, cfg);
    if (run.first_negative_time)
        std::cout << "first_negative_time = " << dde::io::format_double(*run.first_negative_time)
                  << "\n";
    else
        std::cout << "first_negative_time = none\n";
    std::cout << "u_delta(tau) = " << dde::io::format_double(run.u_at_tau) << "\n"
              << "u0(tau)      = " << dde::io::format_double(run.u0_at_tau)
              << "  (analytic delta -> 0 limit)\n";
    return 0;
}

int cmd_sweep(const std::string& config_path, const std::string& out_path,
              const std::string& summary_path, int workers, bool fine,
              std::optional<std::uint64_t> seed_override) {
    json cfg = dde::io::load_json(config_path);
    dde::SweepConfig sc = dde::io::sweep_config_from_json(cfg);
    if (workers > 0) sc.workers = workers;
    if (fine) sc.fine = true;
    if (seed_override) sc.seed0 = *seed_override;
    dde::SweepResult result = dde::n_omega_sweep(sc);
    dde::io::write_sweep_csv(out_path, result);
    std::string spath = summary_path.empty() ? out_path + ".summary.csv" : summary_path;
    dde::io::write_sweep_summary_csv(spath, result);
    std::size_t skipped = 0;
    for (const auto& r : result.runs)
        if (r.skipped) {
            ++skipped;
            std::cerr << "warning: skipped alpha=" << r.alpha << " seed=" << r.seed_index
                      << ": " << r.warning << "\n";
        }
    std::cout << "wrote " << out_path << " and " << spath << " (" << result.runs.size()
              << " runs, " << skipped << " skipped)\n";
    return 0;
}

int cmd_convergence(const std::string& config_path) {
    dde::Parameters p{0.005, 0.1, 1.0};
    dde::Nonlinearity nl = dde::Nonlinearity::hill(3.0);
    double h = 0.01, t_end = 5.0;
    if (!config_path.empty()) {
        json cfg = dde::io::load_json(config_path);
        if (cfg.contains("params")) p = dde::io::params_from_json(cfg.at("params"));
        if (cfg.contains("nonlinearity"))
            nl = dde::io::nonlinearity_from_json(cfg.at("nonlinearity"));
        h = cfg.value("h", h);
        t_end = cfg.value("t_end", t_end);
    }
    dde::ConvergenceStudy s = dde::convergence_study(p, nl, h, t_end);
    std::cout << "method of steps:  err(h)=" << s.err_coarse_steps
              << " err(h/2)=" << s.err_fine_steps << " observed order = " << s.order_steps
              << "\n"
              << "renewal marching: err(h)=" << s.err_coarse_renewal
              << " err(h/2)=" << s.err_fine_renewal << " observed order = " << s.order_renewal
              << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"two-delay DDE simulator: positivity certification, segment map "
                 "iteration, D0 construction, and omega-limit sweeps"};
    app.require_subcommand(1);

    std::string config_path, out_path, in_path, summary_path;
    int workers = 0;
    bool fine = false;
    double tol = 1e-8;
    std::optional<std::uint64_t> seed;

    auto* sim = app.add_subcommand("simulate", "integrate a trajectory, write t,u,H,F CSV");
    sim->add_option("--config", config_path)->required();
    sim->add_option("--out", out_path)->required();

    auto* chk = app.add_subcommand("check-h0", "print H0 and the D/D0 verdict for a segment CSV");
    chk->add_option("--config", config_path)->required();
    chk->add_option("--in", in_path)->required();
    chk->add_option("--tol", tol);

    auto* bld = app.add_subcommand("build-init", "construct a certified D0 segment CSV");
    bld->add_option("--config", config_path)->required();
    bld->add_option("--out", out_path)->required();
    bld->add_option("--seed", seed);
    bld->add_option("--tol", tol);

    auto* ctr = app.add_subcommand("counterexample",
                                   "run the sharp-bump counterexample; report the first "
                                   "negative time and u(tau) vs the analytic limit");
    ctr->add_option("--config", config_path)->required();
    ctr->add_option("--out", out_path);

    auto* swp = app.add_subcommand("sweep", "omega-limit parameter sweep, norms + summary CSV");
    swp->add_option("--config", config_path)->required();
    swp->add_option("--out", out_path)->required();
    swp->add_option("--summary-out", summary_path);
    swp->add_option("--workers", workers);
    swp->add_flag("--fine", fine);
    swp->add_option("--seed", seed);

    auto* cnv = app.add_subcommand("convergence-study", "h-refinement study, prints observed orders");
    cnv->add_option("--config", config_path);

    CLI11_PARSE(app, argc, argv);

    try {
        if (sim->parsed()) return cmd_simulate(config_path, out_path);
        if (chk->parsed()) return cmd_check_h0(config_path, in_path, tol);
        if (bld->parsed()) return cmd_build_init(config_path, out_path, seed, tol);
        if (ctr->parsed()) return cmd_counterexample(config_path, out_path);
        if (swp->parsed()) return cmd_sweep(config_path, out_path, summary_path, workers, fine, seed);
        if (cnv->parsed()) return cmd_convergence(config_path);
    } catch (const dde::ConstructionFailedError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConstruction;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConfig;
    }
    return kExitConfig;
}
