#include "maoea/core.hpp"

#include <algorithm>
#include <limits>

namespace maoea {

const ObjectiveVector& Solution::normalized() const {
  if (!f_norm) {
    throw ContractViolation("solution has no normalized objectives");
  }
  return *f_norm;
}

bool dominates(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) {
    throw ContractViolation("dominates: objective vectors differ in length");
  }
  bool strictly_better = false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] > b[i]) {
      return false;
    }
    if (a[i] < b[i]) {
      strictly_better = true;
    }
  }
  return strictly_better;
}

std::vector<std::size_t> nondominated_indices(std::span<const Solution> members) {
  const std::size_t n = members.size();
  std::vector<char> dominated(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    if (dominated[i]) {
      continue;
    }
    for (std::size_t j = i + 1; j < n; ++j) {
      if (dominated[j]) {
        continue;
      }
      if (dominates(members[i].f, members[j].f)) {
        dominated[j] = 1;
      } else if (dominates(members[j].f, members[i].f)) {
        dominated[i] = 1;
        break;
      }
    }
  }
  // A member skipped above because it was already dominated may still dominate
  // later members; dominance is transitive, so whoever dominated it dominates
  // them too and the marking is complete.
  std::vector<std::size_t> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (!dominated[i]) {
      out.push_back(i);
    }
  }
  return out;
}

std::vector<Solution> nondominated_filter(std::span<const Solution> members) {
  std::vector<Solution> out;
  for (const std::size_t i : nondominated_indices(members)) {
    out.push_back(members[i]);
  }
  return out;
}

Population nondominated_filter(const Population& pop) {
  return Population{nondominated_filter(std::span<const Solution>(pop.members)), pop.ctx};
}

NormalizationContext update_ideal(NormalizationContext ctx, std::span<const Solution> members) {
  if (members.empty()) {
    return ctx;
  }
  const std::size_t m = members.front().f.size();
  if (ctx.ideal.empty()) {
    ctx.ideal.assign(m, std::numeric_limits<double>::infinity());
  }
  if (ctx.ideal.size() != m) {
    throw ContractViolation("update_ideal: objective count mismatch");
  }
  for (const auto& s : members) {
    for (std::size_t i = 0; i < m; ++i) {
      ctx.ideal[i] = std::min(ctx.ideal[i], s.f[i]);
    }
  }
  return ctx;
}

NormalizationContext update_nadir(NormalizationContext ctx, std::span<const Solution> pop,
                                  std::span<const Solution> archive) {
  if (pop.empty()) {
    throw ContractViolation("update_nadir: empty population");
  }
  const std::size_t m = pop.front().f.size();
  ctx.nadir.assign(m, -std::numeric_limits<double>::infinity());
  auto scan = [&](std::span<const Solution> group) {
    for (const auto& s : group) {
      for (std::size_t i = 0; i < m; ++i) {
        ctx.nadir[i] = std::max(ctx.nadir[i], s.f[i]);
      }
    }
  };
  scan(pop);
  scan(archive);
  return ctx;
}

ObjectiveVector normalize(std::span<const double> f, const NormalizationContext& ctx) {
  if (f.size() != ctx.ideal.size() || f.size() != ctx.nadir.size()) {
    throw ContractViolation("normalize: context does not match objective count");
  }
  ObjectiveVector out(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) {
    const double range = std::max(ctx.nadir[i] - ctx.ideal[i], kEpsilon);
    out[i] = (f[i] - ctx.ideal[i]) / range;
  }
  return out;
}

void normalize_in_place(std::span<Solution> members, const NormalizationContext& ctx) {
  for (auto& s : members) {
    s.f_norm = normalize(s.f, ctx);
  }
}

std::vector<Solution> normalize(std::vector<Solution> members, const NormalizationContext& ctx) {
  normalize_in_place(members, ctx);
  return members;
}

Population normalize(Population pop, const NormalizationContext& ctx) {
  normalize_in_place(pop.members, ctx);
  pop.ctx = ctx;
  return pop;
}

double squared_norm(std::span<const double> v) noexcept {
  double s = 0.0;
  for (const double x : v) {
    s += x * x;
  }
  return s;
}

} // namespace maoea
