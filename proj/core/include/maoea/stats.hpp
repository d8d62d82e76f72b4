#pragma once

#include <span>
#include <string>
#include <vector>

namespace maoea {

/// Two-sided rank-sum p-value: normal approximation with tie-corrected
/// variance and a 0.5 continuity correction. Needs at least 5 values per side.
[[nodiscard]] double wilcoxon_rank_sum(std::span<const double> a, std::span<const double> b);

/// Average ranks (1-based) of `v`, ties sharing their mean rank.
[[nodiscard]] std::vector<double> average_ranks(std::span<const double> v);

struct SampleStats {
  double median = 0.0;
  double mean = 0.0;
  double stddev = 0.0; // sample standard deviation (n - 1)
  std::size_t count = 0;
};

[[nodiscard]] SampleStats describe(std::span<const double> v);

enum class Verdict { kBetter, kWorse, kSimilar };

/// '+', '-' or '~'.
[[nodiscard]] char verdict_symbol(Verdict v) noexcept;

inline constexpr double kSignificanceLevel = 0.05;

/// Verdict of `candidate` against `baseline` for a lower-is-better metric.
[[nodiscard]] Verdict compare_samples(std::span<const double> candidate,
                                      std::span<const double> baseline, double* p_value = nullptr);

} // namespace maoea
