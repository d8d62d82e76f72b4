#pragma once

#include "maoea/core.hpp"
#include "maoea/rng.hpp"

#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace maoea {

enum class ProblemId {
  kDtlz1, kDtlz2, kDtlz3, kDtlz4, kDtlz5, kDtlz6,
  kIdtlz1, kIdtlz2,
  kWfg1, kWfg2, kWfg3, kWfg4, kWfg5, kWfg6, kWfg7, kWfg8, kWfg9,
  kMaf1, kMaf2, kMaf3, kMaf4, kMaf5, kMaf6, kMaf7,
};

class UnknownProblem : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

class UnsupportedProblem : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

struct ProblemSpec {
  ProblemId id;
  int objectives = 0; // M
  int dimension = 0;  // D
  std::vector<double> lower;
  std::vector<double> upper;

  [[nodiscard]] std::string name() const;
  /// WFG position-parameter count; 0 for the other families.
  [[nodiscard]] int wfg_position_params() const noexcept;
};

/// Builds a problem with the standard dimension for `objectives`:
/// D = M - 1 + 5 for DTLZ1/IDTLZ1, D = M - 1 + 10 otherwise. WFG uses
/// k = M - 1 position and l = 10 distance parameters, z_i in [0, 2i].
[[nodiscard]] ProblemSpec make_problem(ProblemId id, int objectives);
[[nodiscard]] ProblemSpec make_problem(std::string_view name, int objectives);

[[nodiscard]] std::string_view problem_name(ProblemId id);
[[nodiscard]] ProblemId parse_problem(std::string_view name);
[[nodiscard]] std::span<const ProblemId> all_problems();

/// Objective vector of `x`. Throws ContractViolation when `x` has the wrong
/// length or leaves the box.
[[nodiscard]] ObjectiveVector evaluate(const ProblemSpec& spec, std::span<const double> x);

/// `n` points on the analytic Pareto front, deterministic in `rng`.
[[nodiscard]] std::vector<ObjectiveVector> true_pf_sample(const ProblemSpec& spec, std::size_t n,
                                                          RngStream& rng);

/// Reference-set density: 5000 points for M <= 5, 10000 above.
[[nodiscard]] std::size_t default_reference_size(int objectives) noexcept;

/// The reference front used for IGD, seeded from (problem, M) only so every
/// caller sees the same set.
[[nodiscard]] std::vector<ObjectiveVector> reference_front(const ProblemSpec& spec);

} // namespace maoea
