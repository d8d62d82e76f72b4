#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace maoea {

using DecisionVector = std::vector<double>;
using ObjectiveVector = std::vector<double>;

/// Raised when a caller breaks a documented precondition.
class ContractViolation : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

/// Floor for denominators that can collapse to zero (normalization ranges,
/// vector norms, convergence of the ideal point).
inline constexpr double kEpsilon = 1e-12;

struct Solution {
  DecisionVector x;
  ObjectiveVector f;                     // raw objectives
  std::optional<ObjectiveVector> f_norm; // set by normalize()

  [[nodiscard]] const ObjectiveVector& normalized() const;
};

struct NormalizationContext {
  ObjectiveVector ideal; // z*
  ObjectiveVector nadir; // z^nad

  [[nodiscard]] std::size_t objectives() const noexcept { return ideal.size(); }
  [[nodiscard]] bool empty() const noexcept { return ideal.empty(); }
};

struct Population {
  std::vector<Solution> members;
  NormalizationContext ctx;

  [[nodiscard]] std::size_t size() const noexcept { return members.size(); }
  [[nodiscard]] bool empty() const noexcept { return members.empty(); }
};

/// Pareto dominance under minimization.
[[nodiscard]] bool dominates(std::span<const double> a, std::span<const double> b);

/// Indices of members no other member dominates, in input order. Equal
/// objective vectors never dominate one another, so duplicates survive together.
[[nodiscard]] std::vector<std::size_t> nondominated_indices(std::span<const Solution> members);

[[nodiscard]] std::vector<Solution> nondominated_filter(std::span<const Solution> members);
[[nodiscard]] Population nondominated_filter(const Population& pop);

/// Componentwise running minimum. An empty context is initialized from `members`.
[[nodiscard]] NormalizationContext update_ideal(NormalizationContext ctx,
                                                std::span<const Solution> members);

/// Nadir recomputed from scratch as the componentwise max over `pop` and
/// `archive`; the ideal point is carried over unchanged.
[[nodiscard]] NormalizationContext update_nadir(NormalizationContext ctx,
                                                std::span<const Solution> pop,
                                                std::span<const Solution> archive = {});

[[nodiscard]] ObjectiveVector normalize(std::span<const double> f, const NormalizationContext& ctx);

/// Returns `members` with f_norm recomputed under `ctx`.
[[nodiscard]] std::vector<Solution> normalize(std::vector<Solution> members,
                                              const NormalizationContext& ctx);
[[nodiscard]] Population normalize(Population pop, const NormalizationContext& ctx);

void normalize_in_place(std::span<Solution> members, const NormalizationContext& ctx);

[[nodiscard]] double squared_norm(std::span<const double> v) noexcept;

} // namespace maoea
