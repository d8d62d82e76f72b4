#pragma once

#include "maoea/core.hpp"
#include "maoea/problems.hpp"
#include "maoea/rng.hpp"

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace maoea {

struct ReferenceSet {
  std::vector<ObjectiveVector> points;
  std::string problem;
  int objectives = 0;

  /// The shared reference front of `spec`.
  [[nodiscard]] static ReferenceSet of(const ProblemSpec& spec);
};

/// Mean over reference points of the distance to the nearest member of `a`.
/// Returns +inf for an empty `a`.
[[nodiscard]] double igd(std::span<const ObjectiveVector> a, std::span<const ObjectiveVector> ref);
[[nodiscard]] double igd(std::span<const ObjectiveVector> a, const ReferenceSet& ref);
[[nodiscard]] double igd(std::span<const Solution> a, const ReferenceSet& ref);

enum class HvMode { kExact2d, kMonteCarlo };

inline constexpr std::size_t kDefaultHvSamples = 1'000'000;

/// Volume dominated by `a` and bounded by `ref`. Points that do not strictly
/// dominate `ref` contribute nothing. kExact2d needs M = 2; kMonteCarlo
/// samples the box [componentwise min of a, ref].
[[nodiscard]] double hv(std::span<const ObjectiveVector> a, std::span<const double> ref,
                        HvMode mode, std::size_t samples, RngStream& rng);
[[nodiscard]] double hv_exact_2d(std::span<const ObjectiveVector> a, std::span<const double> ref);

/// Margin on the normalized reference point (1.1, ..., 1.1).
inline constexpr double kHvReferenceScale = 1.1;

/// HV of `a` after mapping the reference front's ideal/nadir onto 0/1, with
/// ref = 1.1 per axis, divided by 1.1^M so the result lies in [0, 1].
/// Exact for M = 2, Monte Carlo otherwise.
[[nodiscard]] double normalized_hv(std::span<const ObjectiveVector> a, const ReferenceSet& ref,
                                   RngStream& rng, std::size_t samples = kDefaultHvSamples);

[[nodiscard]] std::size_t binomial(std::size_t n, std::size_t k);

/// Simplex lattice with `p` divisions: every weight vector with entries in
/// {0, 1/p, ..., 1} summing to 1. p = 0 yields no vectors.
[[nodiscard]] std::vector<std::vector<double>> das_dennis(std::size_t m, std::size_t p);

/// Outer plus inner layer count for a two-layer lattice.
[[nodiscard]] std::size_t two_layer_size(std::size_t m, std::size_t p1, std::size_t p2);

/// Population size used for M in {5, 10, 13, 15}; throws std::invalid_argument
/// for other M (pass an explicit size instead).
[[nodiscard]] std::size_t default_population_size(int objectives);

} // namespace maoea
