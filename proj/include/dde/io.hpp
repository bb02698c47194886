#pragma once

#include <filesystem>
#include <functional>
#include <string>

#include <json.hpp>

#include "dde/counterexample.hpp"
#include "dde/nonlinearity.hpp"
#include "dde/params.hpp"
#include "dde/segment.hpp"
#include "dde/sweep.hpp"
#include "dde/trajectory.hpp"

namespace dde::io {

using json = nlohmann::json;

Parameters params_from_json(const json& j);
json params_to_json(const Parameters& p);

Nonlinearity nonlinearity_from_json(const json& j);
json nonlinearity_to_json(const Nonlinearity& nl);

SweepConfig sweep_config_from_json(const json& j);
json sweep_config_to_json(const SweepConfig& cfg);

CounterexampleSpec counterexample_from_json(const json& j);

// Parses a JSON file; throws std::runtime_error with a line/byte-position
// message on malformed input.
json load_json(const std::filesystem::path& path);

// Writes via a temp file in the same directory, renamed on success, so a
// failing run never leaves a partial output behind.
void atomic_write(const std::filesystem::path& path,
                  const std::function<void(std::ostream&)>& writer);

// All numeric output uses 17 significant digits for bit-exact round trips.
std::string format_double(double v);

// Trajectory CSV: provenance comment lines, then header t,u,H,F.
void write_trajectory_csv(const std::filesystem::path& path, const Trajectory& traj,
                          const json& config);

// Segment CSV: provenance comment lines, then header t,u.
void write_segment_csv(const std::filesystem::path& path, const HistorySegment& seg,
                       const Parameters& p, const json& config);
HistorySegment read_segment_csv(const std::filesystem::path& path);

// Sweep CSVs: per-sample norms (alpha,seed,iter_index,l1_norm) and the
// per-alpha summary (alpha,label,n_clusters).
void write_sweep_csv(const std::filesystem::path& path, const SweepResult& result);
void write_sweep_summary_csv(const std::filesystem::path& path, const SweepResult& result);

}  // namespace dde::io
