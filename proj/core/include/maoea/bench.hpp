#pragma once

#include "maoea/dpp.hpp"
#include "maoea/eigen_solver.hpp"
#include "maoea/stats.hpp"

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace maoea {

/// Version of the CSV layout; bumped whenever a column changes.
inline constexpr std::string_view kSchemaVersion = "1";

/// Bad configuration; `key()` names the offending entry.
class ConfigError : public std::invalid_argument {
public:
  ConfigError(std::string key, const std::string& message);
  [[nodiscard]] const std::string& key() const noexcept { return key_; }

private:
  std::string key_;
};

struct BenchConfig {
  std::vector<std::string> problems;
  std::vector<int> objectives;
  std::optional<std::size_t> pop_size; // default: lookup by M
  std::size_t max_evals = 100000;
  std::vector<SelectionStrategy> strategies{SelectionStrategy::kDpp};
  SimilarityMode kernel = SimilarityMode::kExpCosDistance;
  EigenMethod eigen_method = EigenMethod::kTridiagonal;
  std::vector<std::uint64_t> seeds{1, 2, 3, 4, 5};
  std::string out_dir;          // traces are written here when non-empty
  unsigned threads = 1;
  std::size_t trace_every = 10; // 0 disables per-generation IGD traces
  std::size_t hv_samples = 1'000'000;

  /// Parses a JSON object. Keys: problems, objectives, pop_size, max_evals,
  /// strategies, kernel, eigen, seeds (count or list), out_dir, threads,
  /// trace_every, hv_samples. Unknown keys are rejected.
  [[nodiscard]] static BenchConfig parse(std::string_view json_text);
  [[nodiscard]] static BenchConfig load(const std::filesystem::path& file);
  void validate() const;
};

struct CellSpec {
  std::string problem;
  int objectives = 0;
  SelectionStrategy strategy = SelectionStrategy::kDpp;
  std::uint64_t seed = 0;

  [[nodiscard]] std::string label() const;
};

struct RunRecord {
  std::string problem;
  int objectives = 0;
  int dimension = 0;
  std::size_t population_size = 0;
  std::string strategy;
  std::string kernel;
  std::uint64_t seed = 0;
  std::size_t evaluations = 0;
  double igd = 0.0;
  double hv = 0.0;
  std::int64_t wall_ms = 0;
  std::string trace_path;
};

struct CellFailure {
  CellSpec cell;
  std::string message;
};

struct MatrixResult {
  std::vector<RunRecord> records; // completed cells, in expansion order
  std::vector<CellFailure> failures;
};

/// problem x M x strategy x seed, in that nesting order.
[[nodiscard]] std::vector<CellSpec> expand_cells(const BenchConfig& config);

[[nodiscard]] RunRecord run_cell(const BenchConfig& config, const CellSpec& cell);

/// Runs every cell on `config.threads` workers. Output order and content do
/// not depend on the thread count.
[[nodiscard]] MatrixResult run_matrix(const BenchConfig& config);

[[nodiscard]] std::string csv_header();
[[nodiscard]] std::string csv_row(const RunRecord& record);
void write_csv(std::ostream& out, const std::vector<RunRecord>& records);
[[nodiscard]] std::vector<RunRecord> read_csv(std::istream& in);
[[nodiscard]] std::string to_json(const std::vector<RunRecord>& records);

struct ComparisonResult {
  std::string problem;
  int objectives = 0;
  std::string baseline;
  std::string candidate;
  SampleStats baseline_stats;
  SampleStats candidate_stats;
  double p_value = 1.0;
  Verdict verdict = Verdict::kSimilar;
};

/// IGD of every non-baseline strategy against `baseline`, per (problem, M)
/// cell. Cells lacking the baseline are skipped.
[[nodiscard]] std::vector<ComparisonResult> summarize(const std::vector<RunRecord>& records,
                                                      std::string_view baseline);

/// Markdown table with one row per comparison and a +/-/~ totals row per
/// candidate strategy.
[[nodiscard]] std::string to_markdown(const std::vector<ComparisonResult>& results);

} // namespace maoea
