#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "bpc/bpc.hpp"
#include "bpc/harness/generate.hpp"
#include "json.hpp"

namespace bpc::harness {

/// A block of generated instances in a suite file:
///   {"class": "bipartite", "count": 20, "n": 12, "density": 0.3,
///    "sizes": {"kind": "discrete", "values": ["1/4", "1/2"]}, "b3dm": {...}}
/// Instance seeds derive from the suite seed and the group index.
struct InstanceGroup {
  GeneratorSpec spec;
  int count = 1;
};

/// Suite file:
///   {"name": "smoke", "seed": 1, "algorithms": ["color_sets", "abs_bpb"],
///    "oracle": true, "oracle_limit": 14, "timestamp": false,
///    "solver": {"eps": "1/6", "strategy": "greedy-sequential"},
///    "instances": [InstanceGroup...], "files": ["a.json"]}
/// An empty algorithm list selects every algorithm.
struct SuiteConfig {
  std::string name = "suite";
  std::uint64_t seed = 0;
  std::vector<std::string> algorithms;
  bool oracle = false;
  int oracle_limit = 14;
  /// Wall-clock fields (run timestamp, micros column). Off for
  /// reproducible reports.
  bool timestamp = false;
  SolverConfig solver;
  std::vector<InstanceGroup> groups;
  std::vector<std::filesystem::path> files;
};

[[nodiscard]] GeneratorSpec generator_spec_from_json(const nlohmann::json& doc);
[[nodiscard]] SolverConfig solver_config_from_json(const nlohmann::json& doc);
/// Relative file paths are resolved against `base`.
[[nodiscard]] SuiteConfig suite_from_json(const nlohmann::json& doc, const std::filesystem::path& base = {});
[[nodiscard]] nlohmann::json suite_to_json(const SuiteConfig& config);

/// Reads a suite file; the CBP_SEED environment variable, when set,
/// replaces the seed.
[[nodiscard]] SuiteConfig load_suite(const std::filesystem::path& path);

/// One (instance, algorithm) result. Bound checks are empty when they do
/// not apply: lemma2 (FFD bounds per color class) and lemma4 on color_sets,
/// lemma8 on matching and lemma16 on multipartite (both need OPT), lemma12
/// on abs_bpb when an assignment was rounded.
struct RunRow {
  std::string instance_id;
  std::string graph_class;
  int n = 0;
  std::string algorithm;
  std::optional<int> bins;
  std::optional<int> opt;
  std::optional<bool> lemma2_ok, lemma4_ok, lemma8_ok, lemma12_ok, lemma16_ok;
  std::vector<std::string> flags;  ///< "skipped", "infeasible", solver flags
  std::optional<long long> micros;
  Packing packing;

  [[nodiscard]] std::optional<double> ratio() const;
  [[nodiscard]] bool feasible() const;
};

struct SuiteInstance {
  std::string id;
  std::string graph_class;
  ConflictInstance instance;
  std::optional<int> opt;
};

/// Empirical ratios per (class, algorithm).
struct SummaryRow {
  std::string graph_class;
  std::string algorithm;
  int runs = 0;
  int skipped = 0;
  int with_opt = 0;
  double max_ratio = 0.0;
  double mean_ratio = 0.0;
  int infeasible = 0;
};

struct SuiteResult {
  std::vector<SuiteInstance> instances;  ///< sorted by id
  std::vector<RunRow> rows;              ///< sorted by (instance id, algorithm)
  std::vector<SummaryRow> summary;       ///< sorted by (class, algorithm)
};

/// Materializes the instances of a suite in a fixed order.
[[nodiscard]] std::vector<SuiteInstance> suite_instances(const SuiteConfig& config);

/// Runs every selected algorithm on every instance, `jobs` instances at a
/// time. Algorithms that do not apply to an instance are recorded as
/// skipped.
[[nodiscard]] SuiteResult run_suite(const SuiteConfig& config, int jobs = 1);

[[nodiscard]] std::string report_csv(const SuiteResult& result);
[[nodiscard]] std::string summary_csv(const SuiteResult& result);

/// Writes report.csv, summary.csv, run.json and instances/<id>.json.
void write_suite(const SuiteResult& result, const SuiteConfig& config, const std::filesystem::path& out);

}  // namespace bpc::harness
