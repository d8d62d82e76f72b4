#include "maoea/csa.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>

namespace maoea {

namespace {

std::size_t ceil_div(std::size_t a, std::size_t b) { return (a + b - 1) / b; }

void take_sorted_prefix(std::span<const Solution> source, const std::vector<double>& key,
                        std::size_t quota, std::vector<Solution>& out) {
  std::vector<std::size_t> order(source.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return key[a] < key[b]; });
  const std::size_t take = std::min(quota, order.size());
  for (std::size_t i = 0; i < take; ++i) {
    out.push_back(source[order[i]]);
  }
}

} // namespace

CsaQuotas csa_quotas(std::size_t n, std::size_t m) {
  if (m == 0) {
    throw ContractViolation("csa_quotas: zero objectives");
  }
  return CsaQuotas{ceil_div(n, 3 * m), ceil_div(2 * n, 3 * m)};
}

CornerArchive build_csa(std::span<const Solution> source, std::size_t n, std::size_t m) {
  CornerArchive csa;
  if (source.empty()) {
    return csa;
  }
  const CsaQuotas q = csa_quotas(n, m);
  std::vector<double> key(source.size());

  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t s = 0; s < source.size(); ++s) {
      key[s] = source[s].f[i];
    }
    take_sorted_prefix(source, key, q.single, csa.members);
  }
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t s = 0; s < source.size(); ++s) {
      double acc = 0.0;
      for (std::size_t j = 0; j < m; ++j) {
        if (j != i) {
          acc += source[s].f[j] * source[s].f[j];
        }
      }
      key[s] = std::sqrt(acc);
    }
    take_sorted_prefix(source, key, q.remaining, csa.members);
  }
  return csa;
}

CornerArchive update_csa(const CornerArchive& old, std::span<const Solution> offspring,
                         std::size_t n) {
  std::vector<Solution> source;
  source.reserve(old.size() + offspring.size());
  std::set<DecisionVector> seen;
  auto add = [&](const Solution& s) {
    if (seen.insert(s.x).second) {
      source.push_back(s);
    }
  };
  for (const auto& s : old.members) {
    add(s);
  }
  for (const auto& s : offspring) {
    add(s);
  }
  if (source.empty()) {
    return {};
  }
  return build_csa(source, n, source.front().f.size());
}

double threshold(std::span<const Solution> normalized_members) {
  if (normalized_members.empty()) {
    throw ContractViolation("threshold: empty archive");
  }
  double t = 0.0;
  for (const auto& s : normalized_members) {
    t = std::max(t, std::sqrt(squared_norm(s.normalized())));
  }
  return t;
}

double threshold(const CornerArchive& csa, const NormalizationContext& ctx) {
  if (csa.empty()) {
    throw ContractViolation("threshold: empty archive");
  }
  double t = 0.0;
  for (const auto& s : csa.members) {
    t = std::max(t, std::sqrt(squared_norm(normalize(s.f, ctx))));
  }
  return t;
}

} // namespace maoea
