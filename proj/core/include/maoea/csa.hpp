#pragma once

#include "maoea/core.hpp"

#include <span>
#include <utility>
#include <vector>

namespace maoea {

/// Approximate corner solutions. For every objective i the archive holds the
/// ceil(N/3M) best solutions by f_i and the ceil(2N/3M) best by the norm of
/// the remaining M-1 objectives. Lists are concatenated without dedup.
struct CornerArchive {
  std::vector<Solution> members;

  [[nodiscard]] std::size_t size() const noexcept { return members.size(); }
  [[nodiscard]] bool empty() const noexcept { return members.empty(); }
};

struct CsaQuotas {
  std::size_t single = 0;    // per objective, sorted by f_i
  std::size_t remaining = 0; // per objective, sorted by ||f without f_i||

  [[nodiscard]] std::size_t total(std::size_t m) const noexcept { return m * (single + remaining); }
};

[[nodiscard]] CsaQuotas csa_quotas(std::size_t n, std::size_t m);

/// Archive built from raw objectives of `source`. Sorting is stable, so ties
/// keep source order; lists shorter than their quota take everything.
[[nodiscard]] CornerArchive build_csa(std::span<const Solution> source, std::size_t n,
                                      std::size_t m);

/// Rebuild from the old members plus `offspring`. Exact duplicates (same
/// decision vector) in that union are collapsed before building, which makes
/// an update with no offspring a no-op.
[[nodiscard]] CornerArchive update_csa(const CornerArchive& old,
                                       std::span<const Solution> offspring, std::size_t n);

/// Largest normalized objective norm over the archive.
[[nodiscard]] double threshold(const CornerArchive& csa, const NormalizationContext& ctx);

/// Largest norm over members that already carry f_norm.
[[nodiscard]] double threshold(std::span<const Solution> normalized_members);

} // namespace maoea
