#include "maoea/core.hpp"
#include "maoea/rng.hpp"

#include <doctest.h>

#include <algorithm>
#include <vector>

using namespace maoea;

namespace {

Solution sol(std::vector<double> f) { return Solution{{}, std::move(f), std::nullopt}; }

std::vector<Solution> random_points(RngStream& rng, std::size_t n, std::size_t m) {
  std::vector<Solution> out;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<double> f(m);
    for (auto& v : f) {
      v = rng.uniform();
    }
    out.push_back(sol(f));
  }
  return out;
}

// Pairwise oracle written from the definition, independent of dominates().
bool oracle_dominates(const std::vector<double>& a, const std::vector<double>& b) {
  bool strict = false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] > b[i]) {
      return false;
    }
    strict = strict || a[i] < b[i];
  }
  return strict;
}

} // namespace

TEST_CASE("dominance on small vectors") {
  const std::vector<double> a{1, 2}, b{2, 3}, c{2, 1};
  CHECK(dominates(a, b));
  CHECK_FALSE(dominates(a, c));
  CHECK_FALSE(dominates(a, a));
  CHECK_THROWS_AS((void)dominates(a, std::vector<double>{1, 2, 3}), ContractViolation);
}

TEST_CASE("dominance is irreflexive, antisymmetric and transitive on samples") {
  RngStream rng(11);
  for (int trial = 0; trial < 2000; ++trial) {
    // Coarse grid values make ties and dominance chains common.
    std::vector<std::vector<double>> v(3, std::vector<double>(3));
    for (auto& p : v) {
      for (auto& x : p) {
        x = static_cast<double>(rng.index(3));
      }
    }
    CHECK_FALSE(dominates(v[0], v[0]));
    CHECK_FALSE((dominates(v[0], v[1]) && dominates(v[1], v[0])));
    if (dominates(v[0], v[1]) && dominates(v[1], v[2])) {
      CHECK(dominates(v[0], v[2]));
    }
  }
}

TEST_CASE("nondominated filter keeps the incomparable pair") {
  const std::vector<Solution> p{sol({1, 2}), sol({2, 1}), sol({2, 2})};
  const auto out = nondominated_filter(p);
  REQUIRE(out.size() == 2);
  CHECK(out[0].f == std::vector<double>{1, 2});
  CHECK(out[1].f == std::vector<double>{2, 1});
}

TEST_CASE("nondominated filter leaves identical vectors untouched") {
  const std::vector<Solution> p(4, sol({0.3, 0.3, 0.3}));
  CHECK(nondominated_filter(p).size() == 4);
}

TEST_CASE("nondominated filter of nothing is nothing") {
  CHECK(nondominated_filter(std::vector<Solution>{}).empty());
}

TEST_CASE("nondominated filter matches the pairwise oracle and is idempotent") {
  RngStream rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    const auto p = random_points(rng, 50, 3);
    std::vector<std::size_t> expect;
    for (std::size_t i = 0; i < p.size(); ++i) {
      bool dominated = false;
      for (std::size_t j = 0; j < p.size() && !dominated; ++j) {
        dominated = j != i && oracle_dominates(p[j].f, p[i].f);
      }
      if (!dominated) {
        expect.push_back(i);
      }
    }
    CHECK(nondominated_indices(p) == expect);
    const auto once = nondominated_filter(p);
    const auto twice = nondominated_filter(once);
    REQUIRE(once.size() == twice.size());
    for (std::size_t i = 0; i < once.size(); ++i) {
      CHECK(once[i].f == twice[i].f);
    }
  }
}

TEST_CASE("ideal point is a running minimum") {
  NormalizationContext ctx{{1, 1}, {2, 2}};
  ctx = update_ideal(ctx, std::vector<Solution>{sol({0.5, 2})});
  CHECK(ctx.ideal == std::vector<double>{0.5, 1});
  const auto again = update_ideal(ctx, std::vector<Solution>{sol({0.5, 1})});
  CHECK(again.ideal == ctx.ideal);
}

TEST_CASE("sequential ideal updates equal one update over the union") {
  RngStream rng(9);
  const auto a = random_points(rng, 10, 4);
  const auto b = random_points(rng, 10, 4);
  std::vector<Solution> both = a;
  both.insert(both.end(), b.begin(), b.end());
  const auto seq = update_ideal(update_ideal({}, a), b);
  const auto once = update_ideal({}, both);
  CHECK(seq.ideal == once.ideal);
}

TEST_CASE("nadir is recomputed from population and archive") {
  const std::vector<Solution> p{sol({1, 3}), sol({2, 2})};
  NormalizationContext ctx{{0, 0}, {9, 9}};
  CHECK(update_nadir(ctx, p).nadir == std::vector<double>{2, 3});
  const std::vector<Solution> archive{sol({5, 0})};
  CHECK(update_nadir(ctx, p, archive).nadir == std::vector<double>{5, 3});
  CHECK(update_nadir(ctx, p).ideal == ctx.ideal);
}

TEST_CASE("nadir equals the componentwise max on random populations") {
  RngStream rng(21);
  for (int trial = 0; trial < 10; ++trial) {
    const auto p = random_points(rng, 30, 5);
    const auto a = random_points(rng, 7, 5);
    std::vector<double> expect(5, -1.0);
    for (const auto* set : {&p, &a}) {
      for (const auto& s : *set) {
        for (std::size_t i = 0; i < 5; ++i) {
          expect[i] = std::max(expect[i], s.f[i]);
        }
      }
    }
    CHECK(update_nadir(update_ideal({}, p), p, a).nadir == expect);
  }
}

TEST_CASE("normalization maps the ideal-nadir box onto the unit box") {
  const NormalizationContext ctx{{0, 0}, {1, 10}};
  CHECK(normalize(std::vector<double>{0.5, 5}, ctx) == std::vector<double>{0.5, 0.5});
  CHECK(normalize(std::vector<double>{0, 0}, ctx) == std::vector<double>{0, 0});
}

TEST_CASE("degenerate normalization range maps to zero") {
  const NormalizationContext ctx{{2, 0}, {2, 1}};
  CHECK(normalize(std::vector<double>{2, 1}, ctx)[0] == 0.0);
}

TEST_CASE("normalizing twice with one context is a fixed point") {
  RngStream rng(3);
  auto p = random_points(rng, 20, 3);
  const auto ctx = update_nadir(update_ideal({}, p), p);
  auto once = normalize(p, ctx);
  auto twice = normalize(once, ctx);
  for (std::size_t i = 0; i < p.size(); ++i) {
    CHECK(*once[i].f_norm == *twice[i].f_norm);
    for (double v : *once[i].f_norm) {
      CHECK(v >= 0.0);
      CHECK(v <= 1.0);
    }
  }
}

TEST_CASE("reading normalized objectives before normalizing is a contract error") {
  const Solution s = sol({1, 2});
  CHECK_THROWS_AS((void)s.normalized(), ContractViolation);
}
