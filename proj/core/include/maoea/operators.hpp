#pragma once

#include "maoea/core.hpp"
#include "maoea/problems.hpp"
#include "maoea/rng.hpp"

#include <algorithm>
#include <concepts>
#include <span>
#include <utility>
#include <vector>

namespace maoea {

struct VariationParams {
  double crossover_probability = 1.0;
  double mutation_probability = 0.0; // per variable; 1/D by default
  double crossover_index = 20.0;     // eta_c
  double mutation_index = 20.0;      // eta_m

  [[nodiscard]] static VariationParams defaults(int dimension) {
    return VariationParams{1.0, 1.0 / static_cast<double>(dimension), 20.0, 20.0};
  }
};

struct Bounds {
  std::span<const double> lower;
  std::span<const double> upper;
};

[[nodiscard]] inline Bounds bounds_of(const ProblemSpec& spec) {
  return Bounds{spec.lower, spec.upper};
}

/// N uniform solutions inside the box, each evaluated once.
[[nodiscard]] std::vector<Solution> init_population(std::size_t n, const ProblemSpec& spec,
                                                    RngStream& rng);

/// Inverse squared distance to the normalized ideal point, capped at 1/eps.
[[nodiscard]] double convergence(const Solution& s);
[[nodiscard]] double convergence(std::span<const double> f_norm) noexcept;

/// Cosine of the angle between normalized objective vectors, clamped to
/// [-1, 1]; zero vectors count as having norm eps.
[[nodiscard]] double cosine(const Solution& a, const Solution& b);
[[nodiscard]] double cosine(std::span<const double> a, std::span<const double> b) noexcept;

/// Extreme cosines over distinct member pairs (by position, not value).
struct CosineRange {
  double min = 0.0;
  double max = 0.0;
};

[[nodiscard]] CosineRange cosine_range(std::span<const Solution> members);

/// (cos - min) / (max - min), clamped to [0, 1]; 0.5 when the range is empty.
[[nodiscard]] double delta_threshold(double cos_xy, CosineRange range) noexcept;
[[nodiscard]] double delta_threshold(const Solution& x, const Solution& y,
                                     std::span<const Solution> pool_union);

/// Unit-norm copies of each member's normalized objectives, row-major.
class UnitDirections {
public:
  explicit UnitDirections(std::span<const Solution> members);

  [[nodiscard]] double cosine(std::size_t i, std::size_t j) const noexcept;
  [[nodiscard]] std::size_t size() const noexcept { return count_; }

private:
  std::size_t count_;
  std::size_t dim_;
  std::vector<double> data_;
};

/// Random source contract used by the mating-pool filler; RngStream models it.
template <typename R>
concept MatingRandom = requires(R r, std::size_t n) {
  { r.index(n) } -> std::convertible_to<std::size_t>;
  { r.uniform() } -> std::convertible_to<double>;
};

/// Per-draw record of the mating-pool filler, for instrumentation.
struct MatingDraw {
  std::size_t drawn;    // index into P ++ CSA
  std::size_t partner;  // index into P (argmin cosine)
  bool took_partner;
};

/// Fills a mating pool of exactly 2N solutions from P and the corner archive.
/// Each draw picks x from P ++ CSA, finds y in P with minimal cos(x, y), and
/// emits y when a fresh uniform number is below delta(x, y) and
/// con(y) > con(x), otherwise x. Everything is normalized with `ctx` first.
/// Cosine extremes are computed once over P ++ CSA; argmin ties go to the
/// lowest index.
template <MatingRandom Rng>
[[nodiscard]] std::vector<Solution> fill_mating_pool(std::span<const Solution> pop,
                                                     std::span<const Solution> archive,
                                                     std::size_t n,
                                                     const NormalizationContext& ctx, Rng& rng,
                                                     std::vector<MatingDraw>* log = nullptr) {
  if (pop.empty()) {
    throw ContractViolation("fill_mating_pool: empty population");
  }
  std::vector<Solution> pool_union;
  pool_union.reserve(pop.size() + archive.size());
  pool_union.insert(pool_union.end(), pop.begin(), pop.end());
  pool_union.insert(pool_union.end(), archive.begin(), archive.end());
  normalize_in_place(pool_union, ctx);

  const UnitDirections dirs(pool_union);
  const CosineRange range = pool_union.size() >= 2 ? cosine_range(pool_union) : CosineRange{};
  std::vector<double> con(pool_union.size());
  for (std::size_t i = 0; i < pool_union.size(); ++i) {
    con[i] = convergence(*pool_union[i].f_norm);
  }

  std::vector<Solution> mating;
  mating.reserve(2 * n);
  for (std::size_t draw = 0; draw < 2 * n; ++draw) {
    const std::size_t xi = rng.index(pool_union.size());
    std::size_t yi = 0;
    double best = dirs.cosine(xi, 0);
    for (std::size_t j = 1; j < pop.size(); ++j) {
      const double c = dirs.cosine(xi, j);
      if (c < best) {
        best = c;
        yi = j;
      }
    }
    const double delta = delta_threshold(best, range);
    const double r = rng.uniform();
    const bool take_partner = r < delta && con[yi] > con[xi];
    mating.push_back(take_partner ? pool_union[yi] : pool_union[xi]);
    if (log) {
      log->push_back(MatingDraw{xi, yi, take_partner});
    }
  }
  return mating;
}

/// Children of (p1, p2) for per-variable spread factors beta: the mean is
/// kept and the gap scaled, c = mid -/+ beta * (p1 - p2) / 2.
[[nodiscard]] std::pair<DecisionVector, DecisionVector>
sbx_combine(std::span<const double> p1, std::span<const double> p2, std::span<const double> beta);

/// Simulated binary crossover. Each variable takes a spread factor from the
/// eta_c polynomial, half the variables are left unchanged, the sign of the
/// spread is randomized, and the whole pair is copied with probability 1 - p_c.
/// Children are clipped to the box.
[[nodiscard]] std::pair<DecisionVector, DecisionVector>
sbx_crossover(std::span<const double> p1, std::span<const double> p2,
              const VariationParams& params, Bounds bounds, RngStream& rng);

/// Bounded polynomial mutation, each variable with probability p_m.
[[nodiscard]] DecisionVector polynomial_mutation(std::span<const double> x,
                                                 const VariationParams& params, Bounds bounds,
                                                 RngStream& rng);

/// N offspring: two uniformly drawn pool members, SBX (first child kept),
/// mutation, evaluation.
[[nodiscard]] std::vector<Solution> variation(std::span<const Solution> pool, std::size_t n,
                                              const ProblemSpec& spec,
                                              const VariationParams& params, RngStream& rng);

} // namespace maoea
