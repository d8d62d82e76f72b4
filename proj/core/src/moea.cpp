#include "maoea/moea.hpp"

#include <bit>
#include <cstring>
#include <string>

namespace maoea {

AlgoConfig AlgoConfig::defaults(ProblemSpec problem, std::size_t population_size,
                                std::uint64_t seed) {
  AlgoConfig c;
  c.variation = VariationParams::defaults(problem.dimension);
  c.problem = std::move(problem);
  c.population_size = population_size;
  c.seed = seed;
  return c;
}

void AlgoConfig::validate() const {
  if (population_size < 2) {
    throw ContractViolation("AlgoConfig: population size must be at least 2");
  }
  if (max_evaluations < population_size) {
    throw ContractViolation("AlgoConfig: evaluation budget " + std::to_string(max_evaluations) +
                            " is smaller than the population size");
  }
}

std::uint64_t population_digest(std::span<const Solution> members) noexcept {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  auto feed = [&h](std::uint64_t word) {
    for (int b = 0; b < 8; ++b) {
      h ^= (word >> (8 * b)) & 0xffU;
      h *= 0x100000001b3ULL;
    }
  };
  for (const auto& s : members) {
    for (const double v : s.f) {
      feed(std::bit_cast<std::uint64_t>(v));
    }
  }
  return h;
}

std::vector<Solution> environmental_selection(std::span<const Solution> pop,
                                              std::span<const Solution> offspring, std::size_t n,
                                              const CornerArchive& csa,
                                              const NormalizationContext& ctx,
                                              SelectionStrategy strategy, SimilarityMode mode,
                                              RngStream& rng, EigenMethod method) {
  std::vector<Solution> merged;
  merged.reserve(pop.size() + offspring.size());
  merged.insert(merged.end(), pop.begin(), pop.end());
  merged.insert(merged.end(), offspring.begin(), offspring.end());
  std::vector<Solution> front = nondominated_filter(merged);
  if (front.size() <= n) {
    return front;
  }

  std::vector<std::size_t> picked;
  if (strategy == SelectionStrategy::kUniform) {
    picked = uniform_sample(front.size(), n, rng);
  } else {
    normalize_in_place(front, ctx);
    const double t = csa.empty() ? 0.0 : threshold(csa, ctx);
    const KernelMatrix kernel = build_kernel(front, t, mode);
    picked = strategy == SelectionStrategy::kDpp
                 ? dpp_select_greedy(kernel, n, method)
                 : kdpp_sample(kernel, n, rng, RankPolicy::kPadNullSpace, method);
  }
  std::vector<Solution> survivors;
  survivors.reserve(picked.size());
  for (const std::size_t i : picked) {
    survivors.push_back(std::move(front[i]));
  }
  return survivors;
}

RunResult run(const AlgoConfig& config, const GenerationObserver& observer) {
  config.validate();
  const std::size_t n = config.population_size;
  const auto m = static_cast<std::size_t>(config.problem.objectives);
  RngStream rng(config.seed);

  RunResult result;
  std::vector<Solution> pop = init_population(n, config.problem, rng);
  result.evaluations = n;

  CornerArchive csa = build_csa(pop, n, m);
  NormalizationContext ctx = update_ideal({}, pop);
  ctx = update_nadir(ctx, pop);

  auto record = [&](std::size_t generation) {
    GenerationTrace tr;
    tr.generation = generation;
    tr.evaluations = result.evaluations;
    tr.population_size = pop.size();
    tr.digest = population_digest(pop);
    tr.ideal = ctx.ideal;
    if (observer) {
      observer(tr, pop);
    }
    result.trace.push_back(std::move(tr));
  };
  record(0);

  for (std::size_t gen = 1; result.evaluations + n <= config.max_evaluations; ++gen) {
    const std::vector<Solution> pool = fill_mating_pool(pop, csa.members, n, ctx, rng);
    std::vector<Solution> offspring = variation(pool, n, config.problem, config.variation, rng);
    result.evaluations += n;

    ctx = update_ideal(ctx, offspring);
    csa = update_csa(csa, offspring, n);
    pop = environmental_selection(pop, offspring, n, csa, ctx, config.strategy, config.similarity,
                                  rng, config.eigen_method);
    ctx = update_nadir(ctx, pop, csa.members);
    record(gen);
  }

  for (auto& s : pop) {
    s.f_norm.reset();
  }
  result.population = Population{std::move(pop), ctx};
  return result;
}

} // namespace maoea
