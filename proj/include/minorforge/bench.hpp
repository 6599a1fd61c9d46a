#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

namespace minorforge {

/// One (generator, parameters, seed, config) cell of a sweep.
struct ExperimentRecord {
  std::string generator;
  nlohmann::json params = nlohmann::json::object();
  std::uint64_t seed = 0;
  nlohmann::json config = nlohmann::json::object();
  std::int64_t n = 0;
  std::int64_t m = 0;
  double avg_degree = 0;
  std::int64_t certified_k = 0;
  std::int64_t baseline_k = 0;
  std::int64_t runtime_ms = 0;
  nlohmann::json bounds = nlohmann::json::object();
  nlohmann::json verdicts = nlohmann::json::object();
  /// Empty unless the cell failed; failed cells keep certified_k = 0.
  std::string error;

  friend bool operator==(const ExperimentRecord&, const ExperimentRecord&) = default;
};

nlohmann::json to_json(const ExperimentRecord& r);
ExperimentRecord record_from_json(const nlohmann::json& doc);
/// Single JSONL line (no trailing newline).
std::string to_jsonl(const ExperimentRecord& r);

struct SweepOutputs {
  std::optional<std::filesystem::path> jsonl;
  std::optional<std::filesystem::path> csv;
  std::optional<std::filesystem::path> svg;
  /// Worker count; unset reads MINORFORGE_THREADS, then the hardware concurrency.
  std::optional<int> threads;
};

/// Runs every cell of the sweep description
///   {"generators": [{"name": ..., "params": {key: value or [values]}}],
///    "seeds": [...], "configs": [builder config objects], "baseline": bool}
/// on a worker pool. Records come back (and are written) in cell order; a
/// failing cell becomes a record with `error` set and the sweep continues.
std::vector<ExperimentRecord> run_sweep(const nlohmann::json& spec, const SweepOutputs& out = {});

/// CSV with one row per (generator, n, d): generator,n,d,runs,mean_k,sqrt_nd.
std::string summary_csv(const std::vector<ExperimentRecord>& records);

/// 800x600 log-log scatter of certified_k against sqrt(n d).
std::string scatter_svg(const std::vector<ExperimentRecord>& records);

/// FNV-1a 64 over the JSONL of all records with runtime_ms removed.
std::string records_digest(const std::vector<ExperimentRecord>& records);

/// Spearman rank correlation with average ranks for ties. Requires equal
/// sizes >= 2; returns 0 when either side is constant.
double spearman(const std::vector<double>& x, const std::vector<double>& y);

/// Worker count from MINORFORGE_THREADS (positive integer), else the
/// hardware concurrency (at least 1).
int default_thread_count();

}  // namespace minorforge
