#pragma once

#include "maoea/core.hpp"
#include "maoea/csa.hpp"
#include "maoea/dpp.hpp"
#include "maoea/operators.hpp"
#include "maoea/problems.hpp"
#include "maoea/rng.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

namespace maoea {

struct AlgoConfig {
  ProblemSpec problem;
  std::size_t population_size = 0; // N
  std::size_t max_evaluations = 100000;
  VariationParams variation;
  SelectionStrategy strategy = SelectionStrategy::kDpp;
  SimilarityMode similarity = SimilarityMode::kExpCosDistance;
  EigenMethod eigen_method = EigenMethod::kTridiagonal;
  std::uint64_t seed = 0;

  /// Defaults for `problem`: p_c = 1, p_m = 1/D, eta = 20.
  [[nodiscard]] static AlgoConfig defaults(ProblemSpec problem, std::size_t population_size,
                                           std::uint64_t seed);
  void validate() const;
};

struct GenerationTrace {
  std::size_t generation = 0;
  std::size_t evaluations = 0;
  std::size_t population_size = 0;
  std::uint64_t digest = 0; // FNV-1a over the population's raw objectives
  ObjectiveVector ideal;
  std::optional<double> igd;
  std::optional<double> hv;
};

struct RunResult {
  Population population;
  std::vector<GenerationTrace> trace;
  std::size_t evaluations = 0;
};

/// Survivor selection: keep the nondominated part of P ++ C; when it holds
/// more than N members, normalize it and the archive with `ctx`, build the
/// kernel, and keep the N indices picked by `strategy` (in pick order).
[[nodiscard]] std::vector<Solution>
environmental_selection(std::span<const Solution> pop, std::span<const Solution> offspring,
                        std::size_t n, const CornerArchive& csa, const NormalizationContext& ctx,
                        SelectionStrategy strategy, SimilarityMode mode, RngStream& rng,
                        EigenMethod method = EigenMethod::kTridiagonal);

/// Invoked after each completed generation; may fill trace.igd / trace.hv.
using GenerationObserver =
    std::function<void(GenerationTrace& trace, std::span<const Solution> population)>;

/// The full evolutionary loop. Generations run while evaluations + N stay
/// within the budget; each charges exactly N evaluations. Deterministic in
/// config.seed.
[[nodiscard]] RunResult run(const AlgoConfig& config, const GenerationObserver& observer = {});

[[nodiscard]] std::uint64_t population_digest(std::span<const Solution> members) noexcept;

} // namespace maoea
