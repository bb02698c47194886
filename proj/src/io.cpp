#include "dde/io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "dde/errors.hpp"

namespace dde::io {

Parameters params_from_json(const json& j) {
    Parameters p;
    p.gamma = j.at("gamma").get<double>();
    p.tau0 = j.at("tau0").get<double>();
    p.tau = j.at("tau").get<double>();
    p.validate();
    return p;
}

json params_to_json(const Parameters& p) {
    return json{{"gamma", p.gamma}, {"tau0", p.tau0}, {"tau", p.tau}};
}

Nonlinearity nonlinearity_from_json(const json& j) {
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "hill") return Nonlinearity::hill(j.at("alpha").get<double>());
    if (kind == "arctan-sine") return Nonlinearity::arctan_sine(j.at("alpha").get<double>());
    if (kind == "gaussian-bump")
        return Nonlinearity::gaussian_bump(j.at("amplitude").get<double>(),
                                           j.at("phi0").get<double>(),
                                           j.at("delta").get<double>());
    if (kind == "zero") return Nonlinearity::zero();
    if (kind == "constant") return Nonlinearity::constant(j.at("amplitude").get<double>());
    if (kind == "table")
        return Nonlinearity::table(j.at("u").get<std::vector<double>>(),
                                   j.at("f").get<std::vector<double>>());
    throw std::runtime_error("unknown nonlinearity kind: " + kind);
}

json nonlinearity_to_json(const Nonlinearity& nl) {
    json j{{"kind", nl.kind_name()}};
    switch (nl.kind) {
        case Nonlinearity::Kind::Hill:
        case Nonlinearity::Kind::ArctanSine:
            j["alpha"] = nl.alpha;
            break;
        case Nonlinearity::Kind::GaussianBump:
            j["amplitude"] = nl.amplitude;
            j["phi0"] = nl.phi0;
            j["delta"] = nl.delta;
            break;
        case Nonlinearity::Kind::Constant:
            j["amplitude"] = nl.amplitude;
            break;
        case Nonlinearity::Kind::Table:
            j["u"] = nl.table_u;
            j["f"] = nl.table_f;
            break;
        case Nonlinearity::Kind::Zero:
            break;
    }
    j["fbar"] = nl.fbar;
    return j;
}

SweepConfig sweep_config_from_json(const json& j) {
    SweepConfig cfg;
    cfg.alphas = j.at("alphas").get<std::vector<double>>();
    cfg.n_iter = j.value("n_iter", cfg.n_iter);
    cfg.n_keep = j.value("n_keep", cfg.n_keep);
    cfg.n_seeds = j.value("n_seeds", cfg.n_seeds);
    cfg.seed0 = j.value("seed0", cfg.seed0);
    if (j.contains("params")) cfg.p = params_from_json(j.at("params"));
    const std::string fam = j.value("family", std::string("hill"));
    if (fam == "hill")
        cfg.family = Family::Hill;
    else if (fam == "arctan-sine")
        cfg.family = Family::ArctanSine;
    else
        throw std::runtime_error("unknown family: " + fam);
    cfg.h = j.value("h", cfg.h);
    cfg.fine = j.value("fine", cfg.fine);
    if (j.contains("shape")) {
        const json& s = j.at("shape");
        cfg.shape.n_modes = s.value("n_modes", cfg.shape.n_modes);
        cfg.shape.amp_lo = s.value("amp_lo", cfg.shape.amp_lo);
        cfg.shape.amp_hi = s.value("amp_hi", cfg.shape.amp_hi);
    }
    cfg.workers = j.value("workers", cfg.workers);
    cfg.classify_tol = j.value("classify_tol", cfg.classify_tol);
    cfg.validate();
    return cfg;
}

json sweep_config_to_json(const SweepConfig& cfg) {
    return json{{"alphas", cfg.alphas},
                {"n_iter", cfg.n_iter},
                {"n_keep", cfg.n_keep},
                {"n_seeds", cfg.n_seeds},
                {"seed0", cfg.seed0},
                {"params", params_to_json(cfg.p)},
                {"family", family_name(cfg.family)},
                {"h", cfg.h},
                {"fine", cfg.fine},
                {"shape",
                 {{"n_modes", cfg.shape.n_modes},
                  {"amp_lo", cfg.shape.amp_lo},
                  {"amp_hi", cfg.shape.amp_hi}}},
                {"classify_tol", cfg.classify_tol}};
}

CounterexampleSpec counterexample_from_json(const json& j) {
    CounterexampleSpec spec;
    spec.phi0 = j.value("phi0", spec.phi0);
    spec.epsilon = j.value("epsilon", spec.epsilon);
    spec.delta = j.value("delta", spec.delta);
    if (j.contains("params")) spec.p = params_from_json(j.at("params"));
    spec.validate();
    return spec;
}

json load_json(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path.string());
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw std::runtime_error(path.string() + ": " + e.what());
    }
}

void atomic_write(const std::filesystem::path& path,
                  const std::function<void(std::ostream&)>& writer) {
    std::filesystem::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp);
        if (!out) throw std::runtime_error("cannot open " + tmp.string() + " for writing");
        writer(out);
        out.flush();
        if (!out) {
            std::filesystem::remove(tmp);
            throw std::runtime_error("write failed for " + tmp.string());
        }
    }
    std::filesystem::rename(tmp, path);
}

std::string format_double(double v) {
    std::ostringstream ss;
    ss.precision(17);
    ss << v;
    return ss.str();
}

namespace {

void write_provenance(std::ostream& out, const json& config) {
    out << "# config: " << config.dump() << "\n";
}

}  // namespace

void write_trajectory_csv(const std::filesystem::path& path, const Trajectory& traj,
                          const json& config) {
    atomic_write(path, [&](std::ostream& out) {
        write_provenance(out, config);
        out << "t,u,H,F\n";
        for (const auto& s : traj.samples)
            out << format_double(s.t) << ',' << format_double(s.u) << ','
                << format_double(s.H) << ',' << format_double(s.F) << '\n';
    });
}

void write_segment_csv(const std::filesystem::path& path, const HistorySegment& seg,
                       const Parameters& p, const json& config) {
    seg.validate(p);
    atomic_write(path, [&](std::ostream& out) {
        write_provenance(out, config);
        out << "t,u\n";
        for (std::size_t k = 0; k < seg.values.size(); ++k)
            out << format_double(-p.tau + seg.h * static_cast<double>(k)) << ','
                << format_double(seg.values[k]) << '\n';
    });
}

HistorySegment read_segment_csv(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path.string());
    std::vector<double> ts, us;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] == '#' || line.rfind("t,", 0) == 0) continue;
        std::istringstream row(line);
        std::string a, b;
        if (!std::getline(row, a, ',') || !std::getline(row, b))
            throw std::runtime_error(path.string() + ":" + std::to_string(lineno) +
                                     ": expected two comma-separated columns");
        try {
            ts.push_back(std::stod(a));
            us.push_back(std::stod(b));
        } catch (const std::exception&) {
            throw std::runtime_error(path.string() + ":" + std::to_string(lineno) +
                                     ": malformed number");
        }
    }
    if (ts.size() < 5)
        throw std::runtime_error(path.string() + ": segment needs at least 5 samples");
    double h = ts[1] - ts[0];
    for (std::size_t k = 1; k < ts.size(); ++k)
        if (std::abs(ts[k] - ts[k - 1] - h) > 1e-9 * std::max(1.0, std::abs(h)))
            throw std::runtime_error(path.string() + ": non-uniform time spacing at row " +
                                     std::to_string(k));
    if (std::abs(ts.back()) > 1e-9)
        throw std::runtime_error(path.string() + ": segment must end at t = 0");
    HistorySegment seg;
    seg.h = h;
    seg.values = std::move(us);
    return seg;
}

void write_sweep_csv(const std::filesystem::path& path, const SweepResult& result) {
    atomic_write(path, [&](std::ostream& out) {
        write_provenance(out, sweep_config_to_json(result.config));
        for (const auto& run : result.runs)
            if (run.skipped)
                out << "# skipped alpha=" << format_double(run.alpha)
                    << " seed=" << run.seed_index << ": " << run.warning << "\n";
        out << "alpha,seed,iter_index,l1_norm\n";
        for (const auto& run : result.runs) {
            for (std::size_t i = 0; i < run.norms.size(); ++i)
                out << format_double(run.alpha) << ',' << run.seed_index << ',' << i << ','
                    << format_double(run.norms[i]) << '\n';
        }
    });
}

void write_sweep_summary_csv(const std::filesystem::path& path, const SweepResult& result) {
    atomic_write(path, [&](std::ostream& out) {
        write_provenance(out, sweep_config_to_json(result.config));
        out << "alpha,label,n_clusters\n";
        for (const auto& s : result.summaries)
            out << format_double(s.alpha) << ',' << s.label.name() << ','
                << s.label.n_clusters << '\n';
    });
}

}  // namespace dde::io
