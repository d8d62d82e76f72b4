#include "maoea/problems.hpp"

#include "wfg.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <string>

namespace maoea {

namespace {

constexpr double kPi = std::numbers::pi;

struct Entry {
  ProblemId id;
  std::string_view name;
};

constexpr std::array<Entry, 24> kRegistry{{
    {ProblemId::kDtlz1, "dtlz1"},   {ProblemId::kDtlz2, "dtlz2"},   {ProblemId::kDtlz3, "dtlz3"},
    {ProblemId::kDtlz4, "dtlz4"},   {ProblemId::kDtlz5, "dtlz5"},   {ProblemId::kDtlz6, "dtlz6"},
    {ProblemId::kIdtlz1, "idtlz1"}, {ProblemId::kIdtlz2, "idtlz2"}, {ProblemId::kWfg1, "wfg1"},
    {ProblemId::kWfg2, "wfg2"},     {ProblemId::kWfg3, "wfg3"},     {ProblemId::kWfg4, "wfg4"},
    {ProblemId::kWfg5, "wfg5"},     {ProblemId::kWfg6, "wfg6"},     {ProblemId::kWfg7, "wfg7"},
    {ProblemId::kWfg8, "wfg8"},     {ProblemId::kWfg9, "wfg9"},     {ProblemId::kMaf1, "maf1"},
    {ProblemId::kMaf2, "maf2"},     {ProblemId::kMaf3, "maf3"},     {ProblemId::kMaf4, "maf4"},
    {ProblemId::kMaf5, "maf5"},     {ProblemId::kMaf6, "maf6"},     {ProblemId::kMaf7, "maf7"},
}};

constexpr std::array<ProblemId, 24> kAll = [] {
  std::array<ProblemId, 24> ids{};
  for (std::size_t i = 0; i < kRegistry.size(); ++i) {
    ids[i] = kRegistry[i].id;
  }
  return ids;
}();

bool is_wfg(ProblemId id) {
  return id >= ProblemId::kWfg1 && id <= ProblemId::kWfg9;
}

int wfg_index(ProblemId id) {
  return static_cast<int>(id) - static_cast<int>(ProblemId::kWfg1) + 1;
}

// DTLZ1-style linear front: f_i = scale * prod_{j<M-i} x_j * (1 - x_{M-i}).
ObjectiveVector linear_front(std::span<const double> x, int m, double scale) {
  ObjectiveVector f(static_cast<std::size_t>(m), scale);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m - 1 - i; ++j) {
      f[i] *= x[j];
    }
    if (i > 0) {
      f[i] *= 1.0 - x[m - 1 - i];
    }
  }
  return f;
}

// DTLZ2-style spherical front over angles theta_j (in units of pi/2).
ObjectiveVector sphere_front(std::span<const double> theta, int m, double scale) {
  ObjectiveVector f(static_cast<std::size_t>(m), scale);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m - 1 - i; ++j) {
      f[i] *= std::cos(theta[j] * kPi / 2.0);
    }
    if (i > 0) {
      f[i] *= std::sin(theta[m - 1 - i] * kPi / 2.0);
    }
  }
  return f;
}

double rastrigin_g(std::span<const double> xd) {
  double s = 0.0;
  for (const double v : xd) {
    s += (v - 0.5) * (v - 0.5) - std::cos(20.0 * kPi * (v - 0.5));
  }
  return 100.0 * (static_cast<double>(xd.size()) + s);
}

double sphere_g(std::span<const double> xd) {
  double s = 0.0;
  for (const double v : xd) {
    s += (v - 0.5) * (v - 0.5);
  }
  return s;
}

// DTLZ5/DTLZ6 angle map: first angle free, the rest pulled toward 1/2 by g.
std::vector<double> degenerate_angles(std::span<const double> pos, double g, int first_free) {
  std::vector<double> theta(pos.begin(), pos.end());
  for (std::size_t i = static_cast<std::size_t>(first_free); i < theta.size(); ++i) {
    theta[i] = (1.0 + 2.0 * g * pos[i]) / (2.0 * (1.0 + g));
  }
  return theta;
}

ObjectiveVector evaluate_maf2(std::span<const double> x, int m) {
  const int d = static_cast<int>(x.size());
  const int width = (d - m + 1) / m;
  std::vector<double> theta(static_cast<std::size_t>(m - 1));
  for (int j = 0; j < m - 1; ++j) {
    theta[j] = x[j] / 2.0 + 0.25;
  }
  ObjectiveVector f = sphere_front(theta, m, 1.0);
  for (int i = 1; i <= m; ++i) {
    const int head = m - 1 + (i - 1) * width;
    const int tail = i < m ? m - 1 + i * width : d;
    double g = 0.0;
    for (int j = head; j < tail; ++j) {
      const double v = x[j] / 2.0 + 0.25 - 0.5;
      g += v * v;
    }
    f[static_cast<std::size_t>(i - 1)] *= 1.0 + g;
  }
  return f;
}

ObjectiveVector evaluate_impl(const ProblemSpec& spec, std::span<const double> x) {
  const int m = spec.objectives;
  const auto pos = x.first(static_cast<std::size_t>(m - 1));
  const auto dist = x.subspan(static_cast<std::size_t>(m - 1));

  switch (spec.id) {
  case ProblemId::kDtlz1:
    return linear_front(pos, m, 0.5 * (1.0 + rastrigin_g(dist)));
  case ProblemId::kDtlz2:
    return sphere_front(pos, m, 1.0 + sphere_g(dist));
  case ProblemId::kDtlz3:
    return sphere_front(pos, m, 1.0 + rastrigin_g(dist));
  case ProblemId::kDtlz4: {
    std::vector<double> theta(pos.begin(), pos.end());
    for (auto& t : theta) {
      t = std::pow(t, 100.0);
    }
    return sphere_front(theta, m, 1.0 + sphere_g(dist));
  }
  case ProblemId::kDtlz5: {
    const double g = sphere_g(dist);
    return sphere_front(degenerate_angles(pos, g, 1), m, 1.0 + g);
  }
  case ProblemId::kDtlz6: {
    double g = 0.0;
    for (const double v : dist) {
      g += std::pow(v, 0.1);
    }
    return sphere_front(degenerate_angles(pos, g, 1), m, 1.0 + g);
  }
  case ProblemId::kIdtlz1: {
    const double g = rastrigin_g(dist);
    ObjectiveVector f = linear_front(pos, m, 0.5 * (1.0 + g));
    for (auto& v : f) {
      v = 0.5 * (1.0 + g) - v;
    }
    return f;
  }
  case ProblemId::kIdtlz2: {
    const double g = sphere_g(dist);
    ObjectiveVector f = sphere_front(pos, m, 1.0 + g);
    for (auto& v : f) {
      v = (1.0 + g) - v;
    }
    return f;
  }
  case ProblemId::kMaf1: {
    const double g = sphere_g(dist);
    ObjectiveVector f = linear_front(pos, m, 1.0 + g);
    for (auto& v : f) {
      v = (1.0 + g) - v;
    }
    return f;
  }
  case ProblemId::kMaf2:
    return evaluate_maf2(x, m);
  case ProblemId::kMaf3: {
    ObjectiveVector f = sphere_front(pos, m, 1.0 + rastrigin_g(dist));
    for (int i = 0; i < m - 1; ++i) {
      f[i] = std::pow(f[i], 4.0);
    }
    f[m - 1] = f[m - 1] * f[m - 1];
    return f;
  }
  case ProblemId::kMaf4: {
    const double g = rastrigin_g(dist);
    ObjectiveVector f = sphere_front(pos, m, 1.0 + g);
    for (int i = 0; i < m; ++i) {
      f[i] = ((1.0 + g) - f[i]) * std::ldexp(1.0, i + 1);
    }
    return f;
  }
  case ProblemId::kMaf5: {
    std::vector<double> theta(pos.begin(), pos.end());
    for (auto& t : theta) {
      t = std::pow(t, 100.0);
    }
    ObjectiveVector f = sphere_front(theta, m, 1.0 + sphere_g(dist));
    for (int i = 0; i < m; ++i) {
      f[i] *= std::ldexp(1.0, m - i);
    }
    return f;
  }
  case ProblemId::kMaf6: {
    const double g = sphere_g(dist);
    return sphere_front(degenerate_angles(pos, g, 1), m, 1.0 + 100.0 * g);
  }
  case ProblemId::kMaf7: {
    double s = 0.0;
    for (const double v : dist) {
      s += v;
    }
    const double g = 1.0 + 9.0 * s / static_cast<double>(dist.size());
    ObjectiveVector f(pos.begin(), pos.end());
    double h = static_cast<double>(m);
    for (const double v : pos) {
      h -= v / (1.0 + g) * (1.0 + std::sin(3.0 * kPi * v));
    }
    f.push_back((1.0 + g) * h);
    return f;
  }
  default:
    return detail::evaluate_wfg(wfg_index(spec.id), m, spec.wfg_position_params(), x);
  }
}

// --- front samplers ---------------------------------------------------------

ObjectiveVector simplex_point(int m, RngStream& rng) {
  ObjectiveVector w(static_cast<std::size_t>(m));
  double s = 0.0;
  for (auto& v : w) {
    v = -std::log(1.0 - rng.uniform());
    s += v;
  }
  for (auto& v : w) {
    v /= s;
  }
  return w;
}

ObjectiveVector sphere_point(int m, RngStream& rng) {
  ObjectiveVector w(static_cast<std::size_t>(m));
  double s = 0.0;
  do {
    s = 0.0;
    for (auto& v : w) {
      v = std::abs(rng.normal());
      s += v * v;
    }
  } while (s < 1e-300);
  s = std::sqrt(s);
  for (auto& v : w) {
    v /= s;
  }
  return w;
}

std::vector<double> unit_box(int len, RngStream& rng) {
  std::vector<double> u(static_cast<std::size_t>(len));
  for (auto& v : u) {
    v = rng.uniform();
  }
  return u;
}

/// Decision vector with free position variables and distance variables at
/// `distance_value`; used for fronts defined by g = 0.
std::vector<double> optimal_decision(const ProblemSpec& spec, std::span<const double> pos,
                                     double distance_value) {
  std::vector<double> x(static_cast<std::size_t>(spec.dimension), distance_value);
  std::copy(pos.begin(), pos.end(), x.begin());
  return x;
}

ObjectiveVector front_point(const ProblemSpec& spec, RngStream& rng) {
  const int m = spec.objectives;
  switch (spec.id) {
  case ProblemId::kDtlz1: {
    auto w = simplex_point(m, rng);
    for (auto& v : w) {
      v *= 0.5;
    }
    return w;
  }
  case ProblemId::kDtlz2:
  case ProblemId::kDtlz3:
  case ProblemId::kDtlz4:
    return sphere_point(m, rng);
  case ProblemId::kDtlz5:
  case ProblemId::kDtlz6:
  case ProblemId::kMaf6: {
    std::vector<double> theta(static_cast<std::size_t>(m - 1), 0.5);
    theta[0] = rng.uniform();
    return sphere_front(theta, m, 1.0);
  }
  case ProblemId::kIdtlz1: {
    auto w = simplex_point(m, rng);
    for (auto& v : w) {
      v = 0.5 - 0.5 * v;
    }
    return w;
  }
  case ProblemId::kIdtlz2: {
    auto w = sphere_point(m, rng);
    for (auto& v : w) {
      v = 1.0 - v;
    }
    return w;
  }
  case ProblemId::kMaf1: {
    auto w = simplex_point(m, rng);
    for (auto& v : w) {
      v = 1.0 - v;
    }
    return w;
  }
  case ProblemId::kMaf2: {
    std::vector<double> theta = unit_box(m - 1, rng);
    for (auto& t : theta) {
      t = t / 2.0 + 0.25;
    }
    return sphere_front(theta, m, 1.0);
  }
  case ProblemId::kMaf3: {
    auto w = sphere_point(m, rng);
    for (int i = 0; i < m - 1; ++i) {
      w[i] = std::pow(w[i], 4.0);
    }
    w[m - 1] *= w[m - 1];
    return w;
  }
  case ProblemId::kMaf4: {
    auto w = sphere_point(m, rng);
    for (int i = 0; i < m; ++i) {
      w[i] = (1.0 - w[i]) * std::ldexp(1.0, i + 1);
    }
    return w;
  }
  case ProblemId::kMaf5: {
    auto w = sphere_point(m, rng);
    for (int i = 0; i < m; ++i) {
      w[i] *= std::ldexp(1.0, m - i);
    }
    return w;
  }
  case ProblemId::kMaf7: {
    const auto pos = unit_box(m - 1, rng);
    return evaluate_impl(spec, optimal_decision(spec, pos, 0.0));
  }
  case ProblemId::kWfg1:
  case ProblemId::kWfg2:
    return detail::wfg_shape(wfg_index(spec.id), m, unit_box(m - 1, rng));
  case ProblemId::kWfg3: {
    std::vector<double> x(static_cast<std::size_t>(m - 1), 0.5);
    x[0] = rng.uniform();
    return detail::wfg_shape(3, m, x);
  }
  default: {
    // WFG4-9: concave front, an ellipsoid with semi-axes 2m.
    auto w = sphere_point(m, rng);
    for (int i = 0; i < m; ++i) {
      w[i] *= 2.0 * (i + 1);
    }
    return w;
  }
  }
}

bool front_needs_filtering(ProblemId id) {
  return id == ProblemId::kWfg2 || id == ProblemId::kMaf7;
}

} // namespace

std::string ProblemSpec::name() const { return std::string(problem_name(id)); }

int ProblemSpec::wfg_position_params() const noexcept {
  return is_wfg(id) ? objectives - 1 : 0;
}

std::string_view problem_name(ProblemId id) {
  for (const auto& e : kRegistry) {
    if (e.id == id) {
      return e.name;
    }
  }
  return "unknown";
}

ProblemId parse_problem(std::string_view name) {
  std::string lower(name);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  for (const auto& e : kRegistry) {
    if (e.name == lower) {
      return e.id;
    }
  }
  throw UnknownProblem("unknown problem '" + std::string(name) + "'");
}

std::span<const ProblemId> all_problems() { return kAll; }

ProblemSpec make_problem(ProblemId id, int objectives) {
  if (objectives < 2) {
    throw ContractViolation("make_problem: need at least two objectives");
  }
  ProblemSpec spec{id, objectives, 0, {}, {}};
  const bool short_tail = id == ProblemId::kDtlz1 || id == ProblemId::kIdtlz1;
  spec.dimension = objectives - 1 + (short_tail ? 5 : 10);
  spec.lower.assign(static_cast<std::size_t>(spec.dimension), 0.0);
  spec.upper.assign(static_cast<std::size_t>(spec.dimension), 1.0);
  if (is_wfg(id)) {
    for (int i = 0; i < spec.dimension; ++i) {
      spec.upper[i] = 2.0 * (i + 1);
    }
  }
  return spec;
}

ProblemSpec make_problem(std::string_view name, int objectives) {
  return make_problem(parse_problem(name), objectives);
}

ObjectiveVector evaluate(const ProblemSpec& spec, std::span<const double> x) {
  if (x.size() != static_cast<std::size_t>(spec.dimension)) {
    throw ContractViolation("evaluate: decision vector has length " + std::to_string(x.size()) +
                            ", expected " + std::to_string(spec.dimension));
  }
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!(x[i] >= spec.lower[i] && x[i] <= spec.upper[i])) {
      throw ContractViolation("evaluate: variable " + std::to_string(i) + " out of bounds");
    }
  }
  return evaluate_impl(spec, x);
}

std::vector<ObjectiveVector> true_pf_sample(const ProblemSpec& spec, std::size_t n,
                                            RngStream& rng) {
  if (n == 0) {
    throw ContractViolation("true_pf_sample: n must be positive");
  }
  if (!front_needs_filtering(spec.id)) {
    std::vector<ObjectiveVector> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
      out.push_back(front_point(spec, rng));
    }
    return out;
  }
  // Disconnected fronts: oversample the parametric surface and keep the
  // nondominated part until n points are collected.
  std::vector<Solution> pool;
  std::vector<ObjectiveVector> out;
  std::size_t batch = 2 * n;
  while (out.size() < n) {
    for (std::size_t i = 0; i < batch; ++i) {
      pool.push_back(Solution{{}, front_point(spec, rng), std::nullopt});
    }
    out.clear();
    for (const std::size_t i : nondominated_indices(pool)) {
      out.push_back(pool[i].f);
    }
    batch = n;
  }
  out.resize(n);
  return out;
}

std::size_t default_reference_size(int objectives) noexcept {
  return objectives <= 5 ? 5000 : 10000;
}

std::vector<ObjectiveVector> reference_front(const ProblemSpec& spec) {
  RngStream rng(0x5eed0000ULL + static_cast<std::uint64_t>(spec.id),
                static_cast<std::uint64_t>(spec.objectives));
  return true_pf_sample(spec, default_reference_size(spec.objectives), rng);
}

} // namespace maoea
