#include "dde/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cmath>
#include <stdexcept>
#include <thread>

#include "dde/errors.hpp"
#include "dde/integrator.hpp"

namespace dde {

Nonlinearity make_family(Family family, double alpha) {
    switch (family) {
        case Family::Hill: return Nonlinearity::hill(alpha);
        case Family::ArctanSine: return Nonlinearity::arctan_sine(alpha);
    }
    throw std::invalid_argument("unknown family");
}

std::string family_name(Family family) {
    return family == Family::Hill ? "hill" : "arctan-sine";
}

void SweepConfig::validate() const {
    p.validate();
    if (alphas.empty()) throw std::invalid_argument("sweep needs a nonempty alpha list");
    for (double a : alphas)
        if (!std::isfinite(a)) throw std::invalid_argument("alpha values must be finite");
    if (n_keep <= 0 || n_iter <= 0 || n_keep > n_iter)
        throw std::invalid_argument("sweep needs 0 < n_keep <= n_iter");
    if (n_seeds <= 0) throw std::invalid_argument("sweep needs n_seeds > 0");
    Grid::make(p, step());
}

std::vector<HistorySegment> omega_limit(const HistorySegment& u0, int n_iter, int n_keep,
                                        const Parameters& p, const Nonlinearity& nl) {
    if (!in_D0(u0, p, nl))
        throw AdmissibilityError("omega_limit: initial segment fails the D0 membership test");
    return iterate_T(u0, n_iter, p, nl, n_keep);
}

std::string ClusterLabel::name() const {
    switch (kind) {
        case Kind::FixedPoint: return "fixed-point";
        case Kind::FiniteSet: return "finite-set(" + std::to_string(n_clusters) + ")";
        case Kind::ContinuumOrAperiodic: return "continuum-or-aperiodic";
    }
    return "?";
}

ClusterLabel classify_limit_set(const std::vector<double>& sorted_norms, double tol) {
    if (sorted_norms.empty())
        throw std::invalid_argument("classify_limit_set: empty norm list");
    int clusters = 1;
    for (std::size_t i = 1; i < sorted_norms.size(); ++i)
        if (sorted_norms[i] - sorted_norms[i - 1] > tol) ++clusters;
    ClusterLabel label;
    label.n_clusters = clusters;
    if (clusters == 1)
        label.kind = ClusterLabel::Kind::FixedPoint;
    else if (clusters <= 20)
        label.kind = ClusterLabel::Kind::FiniteSet;
    else
        label.kind = ClusterLabel::Kind::ContinuumOrAperiodic;
    return label;
}

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

}  // namespace

std::uint64_t task_seed(std::uint64_t seed0, double alpha, int seed_index) {
    std::uint64_t a = std::bit_cast<std::uint64_t>(alpha);
    return seed0 ^ splitmix64(splitmix64(a) + static_cast<std::uint64_t>(seed_index));
}

SweepResult n_omega_sweep(const SweepConfig& cfg) {
    cfg.validate();
    const double h = cfg.step();

    SweepResult result;
    result.config = cfg;
    const std::size_t n_tasks = cfg.alphas.size() * static_cast<std::size_t>(cfg.n_seeds);
    result.runs.resize(n_tasks);

    auto run_task = [&](std::size_t task) {
        const std::size_t ai = task / static_cast<std::size_t>(cfg.n_seeds);
        const int si = static_cast<int>(task % static_cast<std::size_t>(cfg.n_seeds));
        SeedRun& run = result.runs[task];
        run.alpha = cfg.alphas[ai];
        run.seed_index = si;
        run.seed = task_seed(cfg.seed0, run.alpha, si);
        Nonlinearity nl = make_family(cfg.family, run.alpha);
        try {
            AgeDistribution g = random_g(run.seed, cfg.p, nl, cfg.shape, h);
            HistorySegment u0 = build_d0_segment(g, cfg.p, nl);
            auto tail = omega_limit(u0, cfg.n_iter, cfg.n_keep, cfg.p, nl);
            run.norms.reserve(tail.size());
            for (const auto& seg : tail) run.norms.push_back(l1_norm(seg));
            std::sort(run.norms.begin(), run.norms.end());
        } catch (const ConstructionFailedError& e) {
            run.skipped = true;
            run.warning = e.what();
        } catch (const AdmissibilityError& e) {
            run.skipped = true;
            run.warning = e.what();
        }
    };

    unsigned workers = cfg.workers > 0 ? static_cast<unsigned>(cfg.workers)
                                       : std::max(1u, std::thread::hardware_concurrency());
    workers = std::min<unsigned>(workers, static_cast<unsigned>(n_tasks));
    if (workers <= 1) {
        for (std::size_t t = 0; t < n_tasks; ++t) run_task(t);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (unsigned w = 0; w < workers; ++w)
            pool.emplace_back([&] {
                for (std::size_t t = next.fetch_add(1); t < n_tasks; t = next.fetch_add(1))
                    run_task(t);
            });
        for (auto& th : pool) th.join();
    }

    // Deterministic reduction: per-alpha sorted merge in task order.
    result.summaries.reserve(cfg.alphas.size());
    for (std::size_t ai = 0; ai < cfg.alphas.size(); ++ai) {
        AlphaSummary s;
        s.alpha = cfg.alphas[ai];
        for (int si = 0; si < cfg.n_seeds; ++si) {
            const SeedRun& run = result.runs[ai * static_cast<std::size_t>(cfg.n_seeds) +
                                             static_cast<std::size_t>(si)];
            s.merged_norms.insert(s.merged_norms.end(), run.norms.begin(), run.norms.end());
        }
        std::sort(s.merged_norms.begin(), s.merged_norms.end());
        if (!s.merged_norms.empty())
            s.label = classify_limit_set(s.merged_norms, cfg.classify_tol);
        result.summaries.push_back(std::move(s));
    }
    return result;
}

}  // namespace dde
