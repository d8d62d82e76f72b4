#include "maoea/stats.hpp"

#include "maoea/core.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace maoea {

std::vector<double> average_ranks(std::span<const double> v) {
  const std::size_t n = v.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return v[a] < v[b]; });
  std::vector<double> ranks(n);
  for (std::size_t i = 0; i < n;) {
    std::size_t j = i;
    while (j + 1 < n && v[order[j + 1]] == v[order[i]]) {
      ++j;
    }
    const double r = 0.5 * static_cast<double>(i + j) + 1.0;
    for (std::size_t t = i; t <= j; ++t) {
      ranks[order[t]] = r;
    }
    i = j + 1;
  }
  return ranks;
}

double wilcoxon_rank_sum(std::span<const double> a, std::span<const double> b) {
  if (a.size() < 5 || b.size() < 5) {
    throw ContractViolation("wilcoxon_rank_sum: need at least 5 values per sample");
  }
  std::vector<double> all(a.begin(), a.end());
  all.insert(all.end(), b.begin(), b.end());
  const std::vector<double> ranks = average_ranks(all);

  const auto n1 = static_cast<double>(a.size());
  const auto n2 = static_cast<double>(b.size());
  const double n = n1 + n2;
  const double w = std::accumulate(ranks.begin(), ranks.begin() + static_cast<std::ptrdiff_t>(a.size()), 0.0);
  const double mean = n1 * (n + 1.0) / 2.0;

  std::vector<double> sorted = all;
  std::sort(sorted.begin(), sorted.end());
  double ties = 0.0;
  for (std::size_t i = 0; i < sorted.size();) {
    std::size_t j = i;
    while (j + 1 < sorted.size() && sorted[j + 1] == sorted[i]) {
      ++j;
    }
    const auto t = static_cast<double>(j - i + 1);
    ties += t * t * t - t;
    i = j + 1;
  }
  const double var = n1 * n2 / 12.0 * ((n + 1.0) - ties / (n * (n - 1.0)));
  if (var <= 0.0) {
    return 1.0;
  }
  const double dev = std::max(std::abs(w - mean) - 0.5, 0.0);
  const double z = dev / std::sqrt(var);
  return std::clamp(std::erfc(z / std::sqrt(2.0)), 0.0, 1.0);
}

SampleStats describe(std::span<const double> v) {
  SampleStats s;
  s.count = v.size();
  if (v.empty()) {
    return s;
  }
  std::vector<double> sorted(v.begin(), v.end());
  std::sort(sorted.begin(), sorted.end());
  const std::size_t mid = sorted.size() / 2;
  s.median = sorted.size() % 2 == 1 ? sorted[mid] : 0.5 * (sorted[mid - 1] + sorted[mid]);
  s.mean = std::accumulate(sorted.begin(), sorted.end(), 0.0) / static_cast<double>(sorted.size());
  if (sorted.size() > 1) {
    double ss = 0.0;
    for (const double x : sorted) {
      ss += (x - s.mean) * (x - s.mean);
    }
    s.stddev = std::sqrt(ss / static_cast<double>(sorted.size() - 1));
  }
  return s;
}

char verdict_symbol(Verdict v) noexcept {
  switch (v) {
  case Verdict::kBetter:
    return '+';
  case Verdict::kWorse:
    return '-';
  case Verdict::kSimilar:
    return '~';
  }
  return '~';
}

Verdict compare_samples(std::span<const double> candidate, std::span<const double> baseline,
                        double* p_value) {
  const double p = wilcoxon_rank_sum(candidate, baseline);
  if (p_value != nullptr) {
    *p_value = p;
  }
  if (p >= kSignificanceLevel) {
    return Verdict::kSimilar;
  }
  const double mc = describe(candidate).median;
  const double mb = describe(baseline).median;
  if (mc < mb) {
    return Verdict::kBetter;
  }
  if (mc > mb) {
    return Verdict::kWorse;
  }
  return Verdict::kSimilar;
}

} // namespace maoea
