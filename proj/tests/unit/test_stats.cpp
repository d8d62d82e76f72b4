#include "maoea/stats.hpp"

#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <vector>

using namespace maoea;

namespace {

// Exact two-sided rank-sum p-value by enumerating every split of the pooled ranks.
double permutation_p(const std::vector<double>& a, const std::vector<double>& b) {
  std::vector<double> pooled = a;
  pooled.insert(pooled.end(), b.begin(), b.end());
  const auto ranks = average_ranks(pooled);
  const std::size_t n = pooled.size();
  const std::size_t na = a.size();
  double observed = 0.0;
  for (std::size_t i = 0; i < na; ++i) observed += ranks[i];
  const double mean = static_cast<double>(na) * static_cast<double>(n + 1) / 2.0;
  const double dev = std::abs(observed - mean);
  std::size_t hits = 0;
  std::size_t total = 0;
  for (unsigned mask = 0; mask < (1U << n); ++mask) {
    if (static_cast<std::size_t>(__builtin_popcount(mask)) != na) continue;
    double w = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask & (1U << i)) w += ranks[i];
    }
    ++total;
    if (std::abs(w - mean) >= dev - 1e-12) ++hits;
  }
  return static_cast<double>(hits) / static_cast<double>(total);
}

} // namespace

TEST_CASE("average ranks share ties") {
  const std::vector<double> v{3.0, 1.0, 3.0, 2.0};
  const auto r = average_ranks(v);
  CHECK(r == std::vector<double>{3.5, 1.0, 3.5, 2.0});
}

TEST_CASE("identical samples are not significant") {
  const std::vector<double> a{0.1, 0.2, 0.3, 0.4, 0.5};
  CHECK(wilcoxon_rank_sum(a, a) >= 0.95);
  const std::vector<double> c(6, 1.0);
  CHECK(wilcoxon_rank_sum(c, c) == 1.0);
}

TEST_CASE("fully separated samples are significant") {
  std::vector<double> a;
  std::vector<double> b;
  for (int i = 0; i < 10; ++i) {
    a.push_back(0.1 + 0.01 * i);
    b.push_back(0.5 + 0.01 * i);
  }
  CHECK(wilcoxon_rank_sum(a, b) < 0.001);
  CHECK(wilcoxon_rank_sum(a, b) == doctest::Approx(wilcoxon_rank_sum(b, a)));
}

TEST_CASE("normal approximation tracks the exact permutation test at n = 5") {
  const std::vector<std::pair<std::vector<double>, std::vector<double>>> fixtures{
      {{1, 2, 3, 4, 5}, {6, 7, 8, 9, 10}},
      {{1, 3, 5, 7, 9}, {2, 4, 6, 8, 10}},
      {{1, 2, 4, 7, 8}, {3, 5, 6, 9, 10}},
      {{1, 2, 3, 6, 9}, {4, 5, 7, 8, 10}},
      {{1, 2, 2, 5, 6}, {2, 4, 7, 8, 9}},
  };
  for (const auto& [a, b] : fixtures) {
    CHECK(std::abs(wilcoxon_rank_sum(a, b) - permutation_p(a, b)) <= 0.02);
  }
}

TEST_CASE("fewer than five values per side is rejected") {
  const std::vector<double> a{1, 2, 3, 4};
  const std::vector<double> b{1, 2, 3, 4, 5};
  CHECK_THROWS_AS((void)wilcoxon_rank_sum(a, b), std::logic_error);
}

TEST_CASE("sample description") {
  const std::vector<double> v{4, 1, 3, 2};
  const auto s = describe(v);
  CHECK(s.median == doctest::Approx(2.5));
  CHECK(s.mean == doctest::Approx(2.5));
  CHECK(s.stddev == doctest::Approx(std::sqrt(5.0 / 3.0)));
  CHECK(s.count == 4);
}

TEST_CASE("verdicts follow significance and the median") {
  const std::vector<double> low{0.10, 0.11, 0.12, 0.13, 0.14, 0.15};
  const std::vector<double> high{0.50, 0.51, 0.52, 0.53, 0.54, 0.55};
  double p = -1.0;
  CHECK(compare_samples(low, high, &p) == Verdict::kBetter);
  CHECK(p < kSignificanceLevel);
  CHECK(compare_samples(high, low) == Verdict::kWorse);
  CHECK(compare_samples(low, low) == Verdict::kSimilar);
  CHECK(verdict_symbol(Verdict::kBetter) == '+');
  CHECK(verdict_symbol(Verdict::kWorse) == '-');
  CHECK(verdict_symbol(Verdict::kSimilar) == '~');
}
