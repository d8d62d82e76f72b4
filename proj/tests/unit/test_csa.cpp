#include "maoea/csa.hpp"
#include "maoea/rng.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <vector>

using namespace maoea;

namespace {

std::vector<Solution> random_pop(RngStream& rng, std::size_t n, std::size_t m) {
  std::vector<Solution> out;
  for (std::size_t i = 0; i < n; ++i) {
    Solution s;
    s.x = {static_cast<double>(i)}; // unique decision vectors
    s.f.resize(m);
    for (auto& v : s.f) {
      v = rng.uniform();
    }
    out.push_back(std::move(s));
  }
  return out;
}

} // namespace

TEST_CASE("quotas and size for the five-objective population") {
  const auto q = csa_quotas(126, 5);
  CHECK(q.single == 9);
  CHECK(q.remaining == 17);
  CHECK(q.total(5) == 130);
  RngStream rng(1);
  const auto p = random_pop(rng, 126, 5);
  CHECK(build_csa(p, 126, 5).size() == 130);
}

TEST_CASE("short sources are taken whole per list") {
  RngStream rng(2);
  const auto p = random_pop(rng, 3, 2);
  const auto csa = build_csa(p, 30, 2);
  CHECK(csa.size() == 12); // 4 lists x 3
  for (const auto& s : csa.members) {
    const bool from_source =
        std::any_of(p.begin(), p.end(), [&](const Solution& q) { return q.x == s.x; });
    CHECK(from_source);
  }
}

TEST_CASE("single-objective lists are sorted and start at the argmin") {
  RngStream rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    const auto p = random_pop(rng, 20, 3);
    const std::size_t n = 20;
    const auto q = csa_quotas(n, 3);
    const auto csa = build_csa(p, n, 3);
    for (std::size_t i = 0; i < 3; ++i) {
      std::size_t arg = 0;
      for (std::size_t j = 1; j < p.size(); ++j) {
        if (p[j].f[i] < p[arg].f[i]) arg = j;
      }
      const std::size_t head = i * q.single;
      CHECK(csa.members[head].x == p[arg].x);
      for (std::size_t j = head; j + 1 < head + q.single; ++j) {
        CHECK(csa.members[j].f[i] <= csa.members[j + 1].f[i]);
      }
    }
  }
}

TEST_CASE("update without offspring keeps the archive and its threshold") {
  RngStream rng(4);
  const auto p = random_pop(rng, 60, 4);
  const auto csa = build_csa(p, 60, 4);
  const auto again = update_csa(csa, {}, 60);
  REQUIRE(again.size() == csa.size());
  for (std::size_t i = 0; i < csa.size(); ++i) {
    CHECK(again.members[i].x == csa.members[i].x);
  }
  const NormalizationContext ctx{{0, 0, 0, 0}, {1, 1, 1, 1}};
  CHECK(threshold(again, ctx) == threshold(csa, ctx));
}

TEST_CASE("a new per-objective minimizer heads its list after update") {
  RngStream rng(5);
  const auto p = random_pop(rng, 40, 3);
  const auto csa = build_csa(p, 40, 3);
  Solution star;
  star.x = {-1.0};
  star.f = {0.5, -0.1, 0.5};
  const auto updated = update_csa(csa, std::vector<Solution>{star}, 40);
  const auto q = csa_quotas(40, 3);
  CHECK(updated.members[1 * q.single].x == star.x);
  CHECK(updated.size() == q.total(3));
}

TEST_CASE("threshold is the largest normalized norm") {
  const NormalizationContext unit{{0, 0}, {1, 1}};
  CornerArchive a;
  a.members = {Solution{{}, {1, 0}, {}}, Solution{{}, {0, 1}, {}}};
  CHECK(threshold(a, unit) == doctest::Approx(1.0));
  CornerArchive b;
  b.members = {Solution{{}, {0.3, 0.4}, {}}};
  CHECK(threshold(b, unit) == doctest::Approx(0.5));
  CHECK_THROWS_AS((void)threshold(CornerArchive{}, unit), ContractViolation);

  RngStream rng(6);
  CornerArchive c;
  c.members = random_pop(rng, 50, 3);
  const NormalizationContext ctx{{0, 0, 0}, {2, 2, 2}};
  double expect = 0.0;
  for (const auto& s : c.members) {
    double ss = 0.0;
    for (double v : s.f) ss += (v / 2) * (v / 2);
    expect = std::max(expect, std::sqrt(ss));
  }
  CHECK(threshold(c, ctx) == doctest::Approx(expect).epsilon(1e-12));
  const double before = threshold(c, ctx);
  c.members.push_back(Solution{{}, {1.9, 1.9, 1.9}, {}});
  CHECK(threshold(c, ctx) >= before);
}
