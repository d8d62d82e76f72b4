#include "maoea/indicators.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <vector>

using namespace maoea;

namespace {

std::vector<ObjectiveVector> random_set(RngStream& rng, std::size_t n, std::size_t m) {
  std::vector<ObjectiveVector> out(n, ObjectiveVector(m));
  for (auto& p : out) {
    for (auto& v : p) v = rng.uniform();
  }
  return out;
}

double brute_igd(const std::vector<ObjectiveVector>& a, const std::vector<ObjectiveVector>& r) {
  double s = 0.0;
  for (const auto& x : r) {
    double best = std::numeric_limits<double>::max();
    for (const auto& y : a) {
      double d = 0.0;
      for (std::size_t i = 0; i < x.size(); ++i) d += (x[i] - y[i]) * (x[i] - y[i]);
      best = std::min(best, std::sqrt(d));
    }
    s += best;
  }
  return s / static_cast<double>(r.size());
}

// Random mutually nondominated 2-D front inside the unit box.
std::vector<ObjectiveVector> front_2d(RngStream& rng, std::size_t n) {
  std::vector<ObjectiveVector> out;
  for (std::size_t i = 0; i < n; ++i) {
    const double a = rng.uniform(0.05, 0.95);
    out.push_back({a, std::pow(1.0 - a, rng.uniform(0.5, 2.0)) * 0.9});
  }
  return out;
}

} // namespace

TEST_CASE("igd of the reference itself is zero") {
  RngStream rng(1);
  const auto r = random_set(rng, 30, 3);
  CHECK(igd(r, r) == 0.0);
}

TEST_CASE("igd of a single point against two corners") {
  const std::vector<ObjectiveVector> r{{0, 1}, {1, 0}};
  const std::vector<ObjectiveVector> a{{1, 1}};
  CHECK(igd(a, r) == doctest::Approx(1.0));
  CHECK(std::isinf(igd(std::vector<ObjectiveVector>{}, r)));
}

TEST_CASE("igd matches the double loop") {
  RngStream rng(2);
  for (int trial = 0; trial < 20; ++trial) {
    const auto r = random_set(rng, 20, 4);
    const auto a = random_set(rng, 15, 4);
    CHECK(std::abs(igd(a, r) - brute_igd(a, r)) <= 1e-12);
  }
}

TEST_CASE("igd is zero only when every reference point is covered") {
  RngStream rng(3);
  const auto r = random_set(rng, 10, 3);
  auto a = r;
  a.pop_back();
  CHECK(igd(a, r) > 0.0);
  a.push_back(r.back());
  CHECK(igd(a, r) == 0.0);
}

TEST_CASE("igd never grows when points are added") {
  RngStream rng(4);
  const auto r = random_set(rng, 50, 3);
  std::vector<ObjectiveVector> a;
  double prev = std::numeric_limits<double>::infinity();
  for (const auto& p : random_set(rng, 30, 3)) {
    a.push_back(p);
    const double now = igd(a, r);
    CHECK(now <= prev);
    prev = now;
  }
}

TEST_CASE("hypervolume of single points") {
  RngStream rng(5);
  const std::vector<double> ref{1, 1};
  CHECK(hv(std::vector<ObjectiveVector>{{0, 0}}, ref, HvMode::kExact2d, 0, rng) ==
        doctest::Approx(1.0));
  CHECK(hv(std::vector<ObjectiveVector>{{0.5, 0.5}}, ref, HvMode::kExact2d, 0, rng) ==
        doctest::Approx(0.25));
  CHECK(hv(std::vector<ObjectiveVector>{{1.5, 0.5}}, ref, HvMode::kExact2d, 0, rng) == 0.0);
  CHECK(hv(std::vector<ObjectiveVector>{{0.5, 0.5}}, ref, HvMode::kMonteCarlo, 10000, rng) ==
        doctest::Approx(0.25));
}

TEST_CASE("exact sweep matches inclusion-exclusion on two points") {
  const std::vector<ObjectiveVector> a{{0.2, 0.6}, {0.5, 0.3}};
  const double expect = 0.8 * 0.4 + 0.5 * 0.7 - 0.5 * 0.4;
  CHECK(hv_exact_2d(a, std::vector<double>{1, 1}) == doctest::Approx(expect));
}

TEST_CASE("monte carlo hypervolume tracks the exact sweep in 2-D") {
  RngStream rng(6);
  const std::vector<double> ref{1, 1};
  for (int trial = 0; trial < 3; ++trial) {
    const auto a = front_2d(rng, 25);
    const double exact = hv_exact_2d(a, ref);
    const double mc = hv(a, ref, HvMode::kMonteCarlo, 1'000'000, rng);
    CHECK(std::abs(mc - exact) <= 0.01);
  }
}

TEST_CASE("hypervolume grows when points are added") {
  RngStream rng(7);
  const std::vector<double> ref{1, 1};
  std::vector<ObjectiveVector> a;
  double prev = 0.0;
  for (const auto& p : front_2d(rng, 30)) {
    a.push_back(p);
    const double now = hv_exact_2d(a, ref);
    CHECK(now >= prev);
    prev = now;
  }
}

TEST_CASE("normalized hypervolume of the reference front is close to the box share") {
  const auto spec = make_problem("dtlz1", 2);
  const auto ref = ReferenceSet::of(spec);
  RngStream rng(8);
  const double v = normalized_hv(ref.points, ref, rng);
  // Triangle under x + y = 1 removed from the 1.1 x 1.1 box.
  const double expect = (1.1 * 1.1 - 0.5) / (1.1 * 1.1);
  CHECK(v == doctest::Approx(expect).epsilon(0.01));
  CHECK(v <= 1.0);
}

TEST_CASE("das dennis lattices") {
  CHECK(das_dennis(3, 2).size() == 6);
  CHECK(das_dennis(5, 5).size() == 126);
  CHECK(das_dennis(10, 3).size() == 220);
  CHECK(das_dennis(4, 0).empty());
  for (std::size_t m = 2; m <= 15; ++m) {
    for (std::size_t p = 1; p <= 6; ++p) {
      const auto w = das_dennis(m, p);
      REQUIRE(w.size() == binomial(m + p - 1, p));
      for (const auto& v : w) {
        REQUIRE(std::abs(std::accumulate(v.begin(), v.end(), 0.0) - 1.0) <= 1e-12);
        for (double x : v) REQUIRE(x >= 0.0);
      }
    }
  }
}

TEST_CASE("two-layer population sizes") {
  CHECK(two_layer_size(10, 3, 1) == 230);
  CHECK(two_layer_size(15, 2, 2) == 240);
  CHECK(two_layer_size(5, 5, 0) == 126);
  CHECK(default_population_size(5) == 126);
  CHECK(default_population_size(10) == 230);
  CHECK(default_population_size(13) == 240);
  CHECK(default_population_size(15) == 240);
  CHECK_THROWS_AS((void)default_population_size(7), std::invalid_argument);
}
