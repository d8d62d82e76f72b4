#include "maoea/indicators.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace maoea {

ReferenceSet ReferenceSet::of(const ProblemSpec& spec) {
  return ReferenceSet{reference_front(spec), spec.name(), spec.objectives};
}

double igd(std::span<const ObjectiveVector> a, std::span<const ObjectiveVector> ref) {
  if (ref.empty()) {
    throw ContractViolation("igd: empty reference set");
  }
  if (a.empty()) {
    return std::numeric_limits<double>::infinity();
  }
  const std::size_t m = ref.front().size();
  for (const auto& p : a) {
    if (p.size() != m) {
      throw ContractViolation("igd: objective count mismatch");
    }
  }
  double total = 0.0;
  for (const auto& r : ref) {
    double best = std::numeric_limits<double>::infinity();
    for (const auto& p : a) {
      double d = 0.0;
      for (std::size_t i = 0; i < m; ++i) {
        const double diff = r[i] - p[i];
        d += diff * diff;
      }
      best = std::min(best, d);
    }
    total += std::sqrt(best);
  }
  return total / static_cast<double>(ref.size());
}

double igd(std::span<const ObjectiveVector> a, const ReferenceSet& ref) {
  return igd(a, std::span<const ObjectiveVector>(ref.points));
}

double igd(std::span<const Solution> a, const ReferenceSet& ref) {
  std::vector<ObjectiveVector> fs;
  fs.reserve(a.size());
  for (const auto& s : a) {
    fs.push_back(s.f);
  }
  return igd(std::span<const ObjectiveVector>(fs), ref);
}

namespace {

bool strictly_below(std::span<const double> p, std::span<const double> ref) {
  for (std::size_t i = 0; i < ref.size(); ++i) {
    if (!(p[i] < ref[i])) {
      return false;
    }
  }
  return true;
}

std::vector<ObjectiveVector> inside_box(std::span<const ObjectiveVector> a,
                                        std::span<const double> ref) {
  std::vector<ObjectiveVector> kept;
  for (const auto& p : a) {
    if (p.size() != ref.size()) {
      throw ContractViolation("hv: objective count mismatch");
    }
    if (strictly_below(p, ref)) {
      kept.push_back(p);
    }
  }
  return kept;
}

double hv_monte_carlo(std::span<const ObjectiveVector> a, std::span<const double> ref,
                      std::size_t samples, RngStream& rng) {
  std::vector<ObjectiveVector> pts = inside_box(a, ref);
  if (pts.empty() || samples == 0) {
    return 0.0;
  }
  const std::size_t m = ref.size();
  ObjectiveVector lo(pts.front());
  for (const auto& p : pts) {
    for (std::size_t i = 0; i < m; ++i) {
      lo[i] = std::min(lo[i], p[i]);
    }
  }
  double box = 1.0;
  for (std::size_t i = 0; i < m; ++i) {
    box *= ref[i] - lo[i];
  }
  // Points near the lower corner dominate the most samples; try them first.
  std::sort(pts.begin(), pts.end(), [](const auto& x, const auto& y) {
    return std::accumulate(x.begin(), x.end(), 0.0) < std::accumulate(y.begin(), y.end(), 0.0);
  });

  std::vector<double> s(m);
  std::size_t hits = 0;
  for (std::size_t n = 0; n < samples; ++n) {
    for (std::size_t i = 0; i < m; ++i) {
      s[i] = rng.uniform(lo[i], ref[i]);
    }
    for (const auto& p : pts) {
      bool covered = true;
      for (std::size_t i = 0; i < m; ++i) {
        if (p[i] > s[i]) {
          covered = false;
          break;
        }
      }
      if (covered) {
        ++hits;
        break;
      }
    }
  }
  return box * static_cast<double>(hits) / static_cast<double>(samples);
}

} // namespace

double hv_exact_2d(std::span<const ObjectiveVector> a, std::span<const double> ref) {
  if (ref.size() != 2) {
    throw ContractViolation("hv: exact sweep needs two objectives");
  }
  std::vector<ObjectiveVector> pts = inside_box(a, ref);
  std::sort(pts.begin(), pts.end());
  double area = 0.0;
  double ceiling = ref[1];
  for (const auto& p : pts) {
    if (p[1] < ceiling) {
      area += (ref[0] - p[0]) * (ceiling - p[1]);
      ceiling = p[1];
    }
  }
  return area;
}

double hv(std::span<const ObjectiveVector> a, std::span<const double> ref, HvMode mode,
          std::size_t samples, RngStream& rng) {
  if (mode == HvMode::kExact2d) {
    return hv_exact_2d(a, ref);
  }
  return hv_monte_carlo(a, ref, samples, rng);
}

double normalized_hv(std::span<const ObjectiveVector> a, const ReferenceSet& ref, RngStream& rng,
                     std::size_t samples) {
  if (ref.points.empty()) {
    throw ContractViolation("normalized_hv: empty reference set");
  }
  const std::size_t m = ref.points.front().size();
  ObjectiveVector lo(ref.points.front());
  ObjectiveVector hi(ref.points.front());
  for (const auto& r : ref.points) {
    for (std::size_t i = 0; i < m; ++i) {
      lo[i] = std::min(lo[i], r[i]);
      hi[i] = std::max(hi[i], r[i]);
    }
  }
  std::vector<ObjectiveVector> scaled;
  scaled.reserve(a.size());
  for (const auto& p : a) {
    ObjectiveVector q(m);
    for (std::size_t i = 0; i < m; ++i) {
      q[i] = (p[i] - lo[i]) / std::max(hi[i] - lo[i], kEpsilon);
    }
    scaled.push_back(std::move(q));
  }
  const std::vector<double> point(m, kHvReferenceScale);
  const HvMode mode = m == 2 ? HvMode::kExact2d : HvMode::kMonteCarlo;
  const double volume = hv(scaled, point, mode, samples, rng);
  return volume / std::pow(kHvReferenceScale, static_cast<double>(m));
}

std::size_t binomial(std::size_t n, std::size_t k) {
  if (k > n) {
    return 0;
  }
  k = std::min(k, n - k);
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;
  }
  return r;
}

std::vector<std::vector<double>> das_dennis(std::size_t m, std::size_t p) {
  if (m < 2) {
    throw ContractViolation("das_dennis: need at least two objectives");
  }
  std::vector<std::vector<double>> out;
  if (p == 0) {
    return out;
  }
  out.reserve(binomial(m + p - 1, p));
  std::vector<std::size_t> counts(m, 0);
  // Enumerate compositions of p into m parts in lexicographic order.
  auto emit = [&]() {
    std::vector<double> w(m);
    for (std::size_t i = 0; i < m; ++i) {
      w[i] = static_cast<double>(counts[i]) / static_cast<double>(p);
    }
    out.push_back(std::move(w));
  };
  auto rec = [&](auto&& self, std::size_t pos, std::size_t left) -> void {
    if (pos == m - 1) {
      counts[pos] = left;
      emit();
      return;
    }
    for (std::size_t c = 0; c <= left; ++c) {
      counts[pos] = c;
      self(self, pos + 1, left - c);
    }
  };
  rec(rec, 0, p);
  return out;
}

std::size_t two_layer_size(std::size_t m, std::size_t p1, std::size_t p2) {
  if (p2 > p1) {
    throw ContractViolation("two_layer_size: inner divisions exceed outer");
  }
  const std::size_t outer = binomial(m + p1 - 1, p1);
  const std::size_t inner = p2 > 0 ? binomial(m + p2 - 1, p2) : 0;
  return outer + inner;
}

std::size_t default_population_size(int objectives) {
  switch (objectives) {
  case 5:
    return two_layer_size(5, 5, 0);
  case 10:
    return two_layer_size(10, 3, 1);
  case 13: // no lattice lands between the 10- and 15-objective sizes
  case 15:
    return two_layer_size(15, 2, 2);
  default:
    throw std::invalid_argument("no default population size for M=" +
                                std::to_string(objectives) + "; set pop_size explicitly");
  }
}

} // namespace maoea
