#include "maoea/dpp.hpp"

#include "maoea/operators.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace maoea {

SimilarityMode parse_similarity_mode(std::string_view name) {
  if (name == "cos") {
    return SimilarityMode::kCos;
  }
  if (name == "expneg") {
    return SimilarityMode::kExpNegCos;
  }
  if (name == "expdist") {
    return SimilarityMode::kExpCosDistance;
  }
  throw std::invalid_argument("unknown kernel '" + std::string(name) +
                              "' (expected cos|expneg|expdist)");
}

std::string_view to_string(SimilarityMode mode) noexcept {
  switch (mode) {
  case SimilarityMode::kCos:
    return "cos";
  case SimilarityMode::kExpNegCos:
    return "expneg";
  case SimilarityMode::kExpCosDistance:
    return "expdist";
  }
  return "cos";
}

SelectionStrategy parse_selection_strategy(std::string_view name) {
  if (name == "dpp") {
    return SelectionStrategy::kDpp;
  }
  if (name == "kdpp") {
    return SelectionStrategy::kKdpp;
  }
  if (name == "uniform") {
    return SelectionStrategy::kUniform;
  }
  throw std::invalid_argument("unknown strategy '" + std::string(name) +
                              "' (expected dpp|kdpp|uniform)");
}

std::string_view to_string(SelectionStrategy strategy) noexcept {
  switch (strategy) {
  case SelectionStrategy::kDpp:
    return "dpp";
  case SelectionStrategy::kKdpp:
    return "kdpp";
  case SelectionStrategy::kUniform:
    return "uniform";
  }
  return "dpp";
}

// --- kernel -----------------------------------------------------------------

std::vector<double> qualities(std::span<const Solution> pop, double t) {
  if (pop.empty()) {
    throw ContractViolation("quality: empty population");
  }
  std::vector<double> con(pop.size());
  double best = 0.0;
  for (std::size_t i = 0; i < pop.size(); ++i) {
    con[i] = convergence(pop[i]);
    best = std::max(best, con[i]);
  }
  std::vector<double> q(pop.size());
  for (std::size_t i = 0; i < pop.size(); ++i) {
    const bool inside = std::sqrt(squared_norm(pop[i].normalized())) <= t;
    // max over P of con1 is exactly 1.
    q[i] = inside ? 2.0 : con[i] / best;
  }
  return q;
}

double quality(const Solution& x, std::span<const Solution> pop, double t) {
  if (pop.empty()) {
    throw ContractViolation("quality: empty population");
  }
  double best = 0.0;
  for (const auto& p : pop) {
    best = std::max(best, convergence(p));
  }
  if (std::sqrt(squared_norm(x.normalized())) <= t) {
    return 2.0;
  }
  return convergence(x) / best;
}

double similarity(double cos, SimilarityMode mode) noexcept {
  switch (mode) {
  case SimilarityMode::kCos:
    return cos;
  case SimilarityMode::kExpNegCos:
    return std::exp(-cos);
  case SimilarityMode::kExpCosDistance:
    return std::exp(cos - 1.0);
  }
  return cos;
}

KernelMatrix build_kernel(std::span<const Solution> pop, double t, SimilarityMode mode) {
  const std::size_t n = pop.size();
  const UnitDirections dirs(pop);
  const std::vector<double> q = qualities(pop, t);
  KernelMatrix kernel{Eigen::MatrixXd(n, n), mode};
  auto& l = kernel.entries;
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = j; i < n; ++i) {
      const double c = dirs.cosine(i, j);
      const double s = similarity(c, mode);
      const double v = q[i] * s * q[j];
      l(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = v;
      l(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(i)) = v;
    }
  }
  return kernel;
}

KernelMatrix build_kernel(std::span<const Solution> pop,
                          std::span<const Solution> normalized_archive, SimilarityMode mode) {
  return build_kernel(pop, threshold(normalized_archive), mode);
}

// --- projection loop ----------------------------------------------------------

namespace {

/// Drops coordinate `i` from span(basis): a Householder reflection in
/// coefficient space maps row i onto the last column, which is then removed.
void project_out(Eigen::MatrixXd& basis, Eigen::Index i) {
  const Eigen::Index m = basis.cols();
  Eigen::VectorXd v = basis.row(i).transpose();
  const double norm = v.norm();
  if (norm > 0.0) {
    const double alpha = -std::copysign(norm, v[m - 1]);
    v[m - 1] -= alpha;
    const double vv = v.squaredNorm();
    if (vv > 0.0) {
      const Eigen::VectorXd w = basis * v;
      basis.noalias() -= (2.0 / vv) * w * v.transpose();
    }
  }
  basis.conservativeResize(Eigen::NoChange, m - 1);
  if (m > 1) {
    basis.row(i).setZero();
  }
}

template <typename Chooser>
std::vector<std::size_t> run_projection(Eigen::MatrixXd basis, Chooser&& choose,
                                        const ProjectionObserver& observer) {
  const Eigen::Index n = basis.rows();
  std::vector<char> taken(static_cast<std::size_t>(n), 0);
  std::vector<std::size_t> selected;
  selected.reserve(static_cast<std::size_t>(basis.cols()));
  Eigen::VectorXd score(n);
  while (basis.cols() > 0) {
    score = basis.rowwise().squaredNorm();
    for (Eigen::Index i = 0; i < n; ++i) {
      if (taken[static_cast<std::size_t>(i)]) {
        score[i] = 0.0;
      }
    }
    const Eigen::Index pick = choose(score, taken);
    taken[static_cast<std::size_t>(pick)] = 1;
    selected.push_back(static_cast<std::size_t>(pick));
    project_out(basis, pick);
    if (observer) {
      observer(static_cast<std::size_t>(pick), basis);
    }
  }
  return selected;
}

void check_k(std::size_t k, std::size_t n, const char* who) {
  if (k < 1 || k > n) {
    throw ContractViolation(std::string(who) + ": need 1 <= k <= n (k=" + std::to_string(k) +
                            ", n=" + std::to_string(n) + ")");
  }
}

} // namespace

std::vector<std::size_t> dpp_select_greedy(const EigenSystem& eig, std::size_t k,
                                           const ProjectionObserver& observer) {
  const auto n = static_cast<std::size_t>(eig.vectors.rows());
  check_k(k, n, "dpp_select_greedy");
  Eigen::MatrixXd basis = eig.vectors.leftCols(static_cast<Eigen::Index>(k));
  auto argmax = [](const Eigen::VectorXd& score, const std::vector<char>& taken) {
    Eigen::Index best = -1;
    for (Eigen::Index i = 0; i < score.size(); ++i) {
      if (taken[static_cast<std::size_t>(i)]) {
        continue;
      }
      if (best < 0 || score[i] > score[best]) {
        best = i;
      }
    }
    return best;
  };
  return run_projection(std::move(basis), argmax, observer);
}

std::vector<std::size_t> dpp_select_greedy(const KernelMatrix& kernel, std::size_t k,
                                           EigenMethod method,
                                           const ProjectionObserver& observer) {
  check_k(k, kernel.size(), "dpp_select_greedy");
  return dpp_select_greedy(eigendecompose(kernel.entries, method), k, observer);
}

// --- k-DPP ------------------------------------------------------------------

std::vector<double> elementary_symmetric(std::span<const double> values, std::size_t k) {
  std::vector<double> e(k + 1, 0.0);
  e[0] = 1.0;
  for (const double lambda : values) {
    for (std::size_t l = k; l >= 1; --l) {
      e[l] += lambda * e[l - 1];
    }
  }
  return e;
}

std::vector<std::size_t> kdpp_sample(const EigenSystem& eig, std::size_t k, RngStream& rng,
                                     RankPolicy policy) {
  const auto n = static_cast<std::size_t>(eig.vectors.rows());
  check_k(k, n, "kdpp_sample");

  std::vector<std::size_t> support;
  std::vector<std::size_t> null_space;
  for (std::size_t r = 0; r < n; ++r) {
    (eig.values[static_cast<Eigen::Index>(r)] > kRankTolerance ? support : null_space).push_back(r);
  }

  std::vector<std::size_t> chosen;
  if (support.size() < k) {
    if (policy == RankPolicy::kStrict) {
      throw ContractViolation("kdpp_sample: kernel rank " + std::to_string(support.size()) +
                              " is below k=" + std::to_string(k));
    }
    // Limit of the k-DPP as the null eigenvalues shrink to a common epsilon:
    // the whole support is kept and the rest is uniform over the null space.
    chosen = support;
    for (const std::size_t j : uniform_sample(null_space.size(), k - support.size(), rng)) {
      chosen.push_back(null_space[j]);
    }
  } else {
    // Scale-free: probabilities depend on eigenvalue ratios only.
    const std::size_t s = support.size();
    const double top = eig.values[static_cast<Eigen::Index>(support.front())];
    std::vector<double> lambda(s);
    for (std::size_t r = 0; r < s; ++r) {
      lambda[r] = eig.values[static_cast<Eigen::Index>(support[r])] / top;
    }
    // table[m][l] = e_l(lambda_0..lambda_{m-1}).
    std::vector<std::vector<double>> table(s + 1, std::vector<double>(k + 1, 0.0));
    table[0][0] = 1.0;
    for (std::size_t m = 1; m <= s; ++m) {
      table[m][0] = 1.0;
      for (std::size_t l = 1; l <= k; ++l) {
        table[m][l] = table[m - 1][l] + lambda[m - 1] * table[m - 1][l - 1];
      }
    }
    std::size_t remaining = k;
    for (std::size_t m = s; m >= 1 && remaining > 0; --m) {
      // m == remaining forces the rest in; the ratio is 1 but may underflow.
      const double marginal =
          m == remaining ? 1.0 : lambda[m - 1] * table[m - 1][remaining - 1] / table[m][remaining];
      if (rng.uniform() < marginal) {
        chosen.push_back(support[m - 1]);
        --remaining;
      }
    }
  }
  std::sort(chosen.begin(), chosen.end());

  Eigen::MatrixXd basis(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(chosen.size()));
  for (std::size_t c = 0; c < chosen.size(); ++c) {
    basis.col(static_cast<Eigen::Index>(c)) = eig.vectors.col(static_cast<Eigen::Index>(chosen[c]));
  }
  auto draw = [&rng](const Eigen::VectorXd& score, const std::vector<char>& taken) {
    const double total = score.sum();
    double u = rng.uniform() * total;
    Eigen::Index last = -1;
    for (Eigen::Index i = 0; i < score.size(); ++i) {
      if (taken[static_cast<std::size_t>(i)]) {
        continue;
      }
      last = i;
      if (u < score[i]) {
        return i;
      }
      u -= score[i];
    }
    return last;
  };
  return run_projection(std::move(basis), draw, {});
}

std::vector<std::size_t> kdpp_sample(const KernelMatrix& kernel, std::size_t k, RngStream& rng,
                                     RankPolicy policy, EigenMethod method) {
  check_k(k, kernel.size(), "kdpp_sample");
  EigenSystem eig = eigendecompose(kernel.entries, method);
  for (Eigen::Index i = 0; i < eig.values.size(); ++i) {
    eig.values[i] = std::max(eig.values[i], 0.0);
  }
  return kdpp_sample(eig, k, rng, policy);
}

std::vector<std::size_t> uniform_sample(std::size_t n, std::size_t k, RngStream& rng) {
  if (k > n) {
    throw ContractViolation("uniform_sample: k exceeds n");
  }
  std::vector<std::size_t> idx(n);
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  for (std::size_t i = 0; i < k; ++i) {
    const std::size_t j = i + rng.index(n - i);
    std::swap(idx[i], idx[j]);
  }
  idx.resize(k);
  return idx;
}

} // namespace maoea
