#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "dde/d0_builder.hpp"
#include "dde/nonlinearity.hpp"
#include "dde/params.hpp"
#include "dde/segment.hpp"

namespace dde {

enum class Family { Hill, ArctanSine };

Nonlinearity make_family(Family family, double alpha);
std::string family_name(Family family);

/// Protocol of the omega-limit parameter sweep: per alpha, several random D0
/// seeds, n_iter applications of T, tail of n_keep segments kept as the
/// omega-limit proxy, reduced to L1 norms.
struct SweepConfig {
    std::vector<double> alphas;
    int n_iter = 600;
    int n_keep = 100;
    int n_seeds = 10;
    std::uint64_t seed0 = 0;
    Parameters p{0.005, 0.1, 1.0};
    Family family = Family::Hill;
    double h = 0.005;  // tau0 / 20
    bool fine = false;  // halve the step for spot checks
    GShape shape;
    int workers = 0;  // 0 = hardware concurrency
    double classify_tol = 1e-3;

    void validate() const;
    double step() const { return fine ? h / 2.0 : h; }
};

// Tail of iterate_T as the finite-n omega-limit proxy. Throws
// AdmissibilityError unless u0 passes the D0 membership test.
std::vector<HistorySegment> omega_limit(const HistorySegment& u0, int n_iter, int n_keep,
                                        const Parameters& p, const Nonlinearity& nl);

struct ClusterLabel {
    enum class Kind { FixedPoint, FiniteSet, ContinuumOrAperiodic };
    Kind kind = Kind::FixedPoint;
    int n_clusters = 1;
    std::string name() const;
};

// Cluster a sorted list of norms with gap threshold tol: one cluster is a
// fixed point, 2..20 clusters a finite set, more a continuum or an aperiodic
// orbit.
ClusterLabel classify_limit_set(const std::vector<double>& sorted_norms, double tol);

struct SeedRun {
    double alpha = 0.0;
    int seed_index = 0;
    std::uint64_t seed = 0;
    std::vector<double> norms;  // sorted L1 norms of the kept segments
    bool skipped = false;
    std::string warning;
};

struct AlphaSummary {
    double alpha = 0.0;
    std::vector<double> merged_norms;  // sorted multiset over all seeds
    ClusterLabel label;
};

struct SweepResult {
    SweepConfig config;
    std::vector<SeedRun> runs;          // ordered by (alpha index, seed index)
    std::vector<AlphaSummary> summaries;
};

// Deterministic given seed0: the per-task generator seed depends only on the
// alpha value and seed index, and the merge order is fixed, so the result is
// independent of the worker count and scheduling.
SweepResult n_omega_sweep(const SweepConfig& cfg);

// Generator seed for one (alpha, seed index) task.
std::uint64_t task_seed(std::uint64_t seed0, double alpha, int seed_index);

}  // namespace dde
