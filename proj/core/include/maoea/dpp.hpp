#pragma once

#include "maoea/core.hpp"
#include "maoea/csa.hpp"
#include "maoea/eigen_solver.hpp"
#include "maoea/rng.hpp"

#include <Eigen/Dense>

#include <functional>
#include <span>
#include <string_view>
#include <vector>

namespace maoea {

enum class SimilarityMode {
  kCos,       // S(x, y) = cos(x, y); PSD by construction
  kExpNegCos, // S(x, y) = exp(-cos(x, y))
  kExpCosDistance, // S(x, y) = exp(-(1 - cos(x, y))); positive definite, full rank
};

enum class SelectionStrategy { kDpp, kKdpp, kUniform };

[[nodiscard]] SimilarityMode parse_similarity_mode(std::string_view name);
[[nodiscard]] std::string_view to_string(SimilarityMode mode) noexcept;
[[nodiscard]] SelectionStrategy parse_selection_strategy(std::string_view name);
[[nodiscard]] std::string_view to_string(SelectionStrategy strategy) noexcept;

/// Similarity of two directions with cosine `cos` under `mode`.
[[nodiscard]] double similarity(double cos, SimilarityMode mode) noexcept;

struct KernelMatrix {
  Eigen::MatrixXd entries;
  SimilarityMode mode = SimilarityMode::kCos;

  [[nodiscard]] std::size_t size() const noexcept {
    return static_cast<std::size_t>(entries.rows());
  }
};

/// Quality of every member: con(x) / max con over `pop` outside the radius
/// `t`, and twice the largest such ratio (i.e. 2) inside it.
[[nodiscard]] std::vector<double> qualities(std::span<const Solution> pop, double t);
[[nodiscard]] double quality(const Solution& x, std::span<const Solution> pop, double t);

/// L = diag(q) * S * diag(q) over normalized members of `pop`.
[[nodiscard]] KernelMatrix build_kernel(std::span<const Solution> pop, double t,
                                        SimilarityMode mode = SimilarityMode::kCos);

/// Same, taking t from a corner archive whose members are already normalized.
[[nodiscard]] KernelMatrix build_kernel(std::span<const Solution> pop,
                                        std::span<const Solution> normalized_archive,
                                        SimilarityMode mode = SimilarityMode::kCos);

/// Called after each projection step with the selected index and the
/// remaining basis (n x |V|).
using ProjectionObserver = std::function<void(std::size_t selected, const Eigen::MatrixXd& basis)>;

/// Deterministic DPP selection: keep the k leading eigenvectors, then
/// repeatedly take the unselected index with the largest sum of squared
/// basis coordinates and shrink the basis to its part orthogonal to that
/// coordinate axis. Ties go to the lowest index. Indices come back in
/// selection order.
[[nodiscard]] std::vector<std::size_t>
dpp_select_greedy(const KernelMatrix& kernel, std::size_t k,
                  EigenMethod method = EigenMethod::kTridiagonal,
                  const ProjectionObserver& observer = {});

[[nodiscard]] std::vector<std::size_t>
dpp_select_greedy(const EigenSystem& eig, std::size_t k, const ProjectionObserver& observer = {});

/// What kdpp_sample does when fewer than k eigenvalues exceed 1e-10.
enum class RankPolicy {
  kStrict,        // throw ContractViolation
  kPadNullSpace,  // keep the whole support, fill with uniform null-space vectors
};

/// Exact k-DPP sample: eigenvectors chosen with probability proportional to
/// the product of their eigenvalues, then indices drawn one at a time with
/// probability proportional to their squared basis coordinates.
[[nodiscard]] std::vector<std::size_t>
kdpp_sample(const KernelMatrix& kernel, std::size_t k, RngStream& rng,
            RankPolicy policy = RankPolicy::kStrict,
            EigenMethod method = EigenMethod::kTridiagonal);

[[nodiscard]] std::vector<std::size_t> kdpp_sample(const EigenSystem& eig, std::size_t k,
                                                   RngStream& rng,
                                                   RankPolicy policy = RankPolicy::kStrict);

/// e_l(values) for l = 0..k via the standard recursion.
[[nodiscard]] std::vector<double> elementary_symmetric(std::span<const double> values,
                                                       std::size_t k);

/// k distinct indices uniformly without replacement (partial Fisher-Yates).
[[nodiscard]] std::vector<std::size_t> uniform_sample(std::size_t n, std::size_t k,
                                                      RngStream& rng);

/// Eigenvalues at or below this count as zero when sizing the k-DPP support.
inline constexpr double kRankTolerance = 1e-10;

} // namespace maoea
