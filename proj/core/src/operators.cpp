#include "maoea/operators.hpp"

#include <cmath>
#include <limits>

namespace maoea {

std::vector<Solution> init_population(std::size_t n, const ProblemSpec& spec, RngStream& rng) {
  if (n == 0) {
    throw ContractViolation("init_population: N must be positive");
  }
  std::vector<Solution> pop;
  pop.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    DecisionVector x(static_cast<std::size_t>(spec.dimension));
    for (std::size_t j = 0; j < x.size(); ++j) {
      x[j] = rng.uniform(spec.lower[j], spec.upper[j]);
    }
    ObjectiveVector f = evaluate(spec, x);
    pop.push_back(Solution{std::move(x), std::move(f), std::nullopt});
  }
  return pop;
}

double convergence(std::span<const double> f_norm) noexcept {
  return 1.0 / std::max(squared_norm(f_norm), kEpsilon);
}

double convergence(const Solution& s) { return convergence(s.normalized()); }

double cosine(std::span<const double> a, std::span<const double> b) noexcept {
  double dot = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    dot += a[i] * b[i];
  }
  const double na = std::max(std::sqrt(squared_norm(a)), kEpsilon);
  const double nb = std::max(std::sqrt(squared_norm(b)), kEpsilon);
  return std::clamp(dot / (na * nb), -1.0, 1.0);
}

double cosine(const Solution& a, const Solution& b) {
  return cosine(a.normalized(), b.normalized());
}

UnitDirections::UnitDirections(std::span<const Solution> members)
    : count_(members.size()), dim_(members.empty() ? 0 : members.front().normalized().size()) {
  data_.resize(count_ * dim_);
  for (std::size_t i = 0; i < count_; ++i) {
    const auto& f = members[i].normalized();
    const double norm = std::max(std::sqrt(squared_norm(f)), kEpsilon);
    for (std::size_t k = 0; k < dim_; ++k) {
      data_[i * dim_ + k] = f[k] / norm;
    }
  }
}

double UnitDirections::cosine(std::size_t i, std::size_t j) const noexcept {
  const double* a = data_.data() + i * dim_;
  const double* b = data_.data() + j * dim_;
  double dot = 0.0;
  for (std::size_t k = 0; k < dim_; ++k) {
    dot += a[k] * b[k];
  }
  return std::clamp(dot, -1.0, 1.0);
}

CosineRange cosine_range(std::span<const Solution> members) {
  if (members.size() < 2) {
    throw ContractViolation("cosine_range: need at least two members");
  }
  const UnitDirections dirs(members);
  CosineRange r{std::numeric_limits<double>::infinity(), -std::numeric_limits<double>::infinity()};
  for (std::size_t i = 0; i < dirs.size(); ++i) {
    for (std::size_t j = i + 1; j < dirs.size(); ++j) {
      const double c = dirs.cosine(i, j);
      r.min = std::min(r.min, c);
      r.max = std::max(r.max, c);
    }
  }
  return r;
}

double delta_threshold(double cos_xy, CosineRange range) noexcept {
  const double span = range.max - range.min;
  if (!(span > 0.0)) {
    return 0.5;
  }
  return std::clamp((cos_xy - range.min) / span, 0.0, 1.0);
}

double delta_threshold(const Solution& x, const Solution& y,
                       std::span<const Solution> pool_union) {
  return delta_threshold(cosine(x, y), cosine_range(pool_union));
}

std::pair<DecisionVector, DecisionVector> sbx_combine(std::span<const double> p1,
                                                      std::span<const double> p2,
                                                      std::span<const double> beta) {
  DecisionVector c1(p1.size());
  DecisionVector c2(p1.size());
  for (std::size_t i = 0; i < p1.size(); ++i) {
    if (beta[i] == 1.0) {
      c1[i] = p1[i];
      c2[i] = p2[i];
      continue;
    }
    const double mid = 0.5 * (p1[i] + p2[i]);
    const double half_gap = 0.5 * (p1[i] - p2[i]);
    c1[i] = mid + beta[i] * half_gap;
    c2[i] = mid - beta[i] * half_gap;
  }
  return {std::move(c1), std::move(c2)};
}

std::pair<DecisionVector, DecisionVector> sbx_crossover(std::span<const double> p1,
                                                        std::span<const double> p2,
                                                        const VariationParams& params,
                                                        Bounds bounds, RngStream& rng) {
  if (p1.size() != p2.size()) {
    throw ContractViolation("sbx_crossover: parents differ in length");
  }
  const std::size_t d = p1.size();
  const double eta = params.crossover_index;
  std::vector<double> beta(d);
  for (auto& b : beta) {
    const double mu = rng.uniform();
    b = mu <= 0.5 ? std::pow(2.0 * mu, 1.0 / (eta + 1.0))
                  : std::pow(2.0 - 2.0 * mu, -1.0 / (eta + 1.0));
    if (rng.uniform() < 0.5) {
      b = -b;
    }
    if (rng.uniform() < 0.5) {
      b = 1.0;
    }
  }
  if (rng.uniform() >= params.crossover_probability) {
    std::fill(beta.begin(), beta.end(), 1.0);
  }
  auto children = sbx_combine(p1, p2, beta);
  for (std::size_t i = 0; i < d; ++i) {
    children.first[i] = std::clamp(children.first[i], bounds.lower[i], bounds.upper[i]);
    children.second[i] = std::clamp(children.second[i], bounds.lower[i], bounds.upper[i]);
  }
  return children;
}

DecisionVector polynomial_mutation(std::span<const double> x, const VariationParams& params,
                                   Bounds bounds, RngStream& rng) {
  DecisionVector y(x.begin(), x.end());
  const double eta = params.mutation_index;
  for (std::size_t i = 0; i < y.size(); ++i) {
    if (!(rng.uniform() < params.mutation_probability)) {
      continue;
    }
    const double lo = bounds.lower[i];
    const double hi = bounds.upper[i];
    const double range = hi - lo;
    if (!(range > 0.0)) {
      continue;
    }
    const double mu = rng.uniform();
    double delta = 0.0;
    if (mu < 0.5) {
      const double base = 2.0 * mu + (1.0 - 2.0 * mu) * std::pow(1.0 - (y[i] - lo) / range, eta + 1.0);
      delta = std::pow(base, 1.0 / (eta + 1.0)) - 1.0;
    } else {
      const double base =
          2.0 * (1.0 - mu) + 2.0 * (mu - 0.5) * std::pow(1.0 - (hi - y[i]) / range, eta + 1.0);
      delta = 1.0 - std::pow(base, 1.0 / (eta + 1.0));
    }
    y[i] = std::clamp(y[i] + delta * range, lo, hi);
  }
  return y;
}

std::vector<Solution> variation(std::span<const Solution> pool, std::size_t n,
                                const ProblemSpec& spec, const VariationParams& params,
                                RngStream& rng) {
  if (pool.empty()) {
    throw ContractViolation("variation: empty mating pool");
  }
  const Bounds bounds = bounds_of(spec);
  std::vector<Solution> offspring;
  offspring.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto& a = pool[rng.index(pool.size())];
    const auto& b = pool[rng.index(pool.size())];
    auto children = sbx_crossover(a.x, b.x, params, bounds, rng);
    DecisionVector x = polynomial_mutation(children.first, params, bounds, rng);
    ObjectiveVector f = evaluate(spec, x);
    offspring.push_back(Solution{std::move(x), std::move(f), std::nullopt});
  }
  return offspring;
}

} // namespace maoea
