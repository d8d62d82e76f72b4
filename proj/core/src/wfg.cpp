#include "wfg.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

namespace maoea::detail {

namespace {

using Vec = std::vector<double>;
constexpr double kPi = std::numbers::pi;

double correct_to_01(double a) {
  constexpr double eps = 1e-10;
  if (a <= 0.0 && a >= -eps) {
    return 0.0;
  }
  if (a >= 1.0 && a <= 1.0 + eps) {
    return 1.0;
  }
  return a;
}

// --- transformations -------------------------------------------------------

double s_linear(double y, double a) {
  return correct_to_01(std::abs(y - a) / std::abs(std::floor(a - y) + a));
}

double s_decept(double y, double a, double b, double c) {
  const double tmp1 = std::floor(y - a + b) * (1.0 - c + (a - b) / b) / (a - b);
  const double tmp2 = std::floor(a + b - y) * (1.0 - c + (1.0 - a - b) / b) / (1.0 - a - b);
  return correct_to_01(1.0 + (std::abs(y - a) - b) * (tmp1 + tmp2 + 1.0 / b));
}

double s_multi(double y, double a, double b, double c) {
  const double tmp1 = std::abs(y - c) / (2.0 * (std::floor(c - y) + c));
  const double tmp2 = (4.0 * a + 2.0) * kPi * (0.5 - tmp1);
  return correct_to_01((1.0 + std::cos(tmp2) + 4.0 * b * tmp1 * tmp1) / (b + 2.0));
}

double b_poly(double y, double alpha) { return correct_to_01(std::pow(y, alpha)); }

double b_flat(double y, double a, double b, double c) {
  const double tmp1 = std::min(0.0, std::floor(y - b)) * a * (b - y) / b;
  const double tmp2 = std::min(0.0, std::floor(c - y)) * (1.0 - a) * (y - c) / (1.0 - c);
  return correct_to_01(a + tmp1 - tmp2);
}

double b_param(double y, double u, double a, double b, double c) {
  const double v = a - (1.0 - 2.0 * u) * std::abs(std::floor(0.5 - u) + a);
  return correct_to_01(std::pow(y, b + (c - b) * v));
}

double r_sum(std::span<const double> y, std::span<const double> w) {
  double num = 0.0;
  double den = 0.0;
  for (std::size_t i = 0; i < y.size(); ++i) {
    num += w[i] * y[i];
    den += w[i];
  }
  return correct_to_01(num / den);
}

double r_sum(std::span<const double> y) {
  double num = 0.0;
  for (const double v : y) {
    num += v;
  }
  return correct_to_01(num / static_cast<double>(y.size()));
}

double r_nonsep(std::span<const double> y, int a) {
  const std::size_t n = y.size();
  double num = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    num += y[j];
    for (int k = 0; k <= a - 2; ++k) {
      num += std::abs(y[j] - y[(j + static_cast<std::size_t>(k) + 1) % n]);
    }
  }
  const double half = std::ceil(a / 2.0);
  const double den = static_cast<double>(n) * half * (1.0 + 2.0 * a - 2.0 * half) / a;
  return correct_to_01(num / den);
}

// --- shapes (m is 1-based, x has M-1 entries) -------------------------------

double linear(std::span<const double> x, int m, int big_m) {
  double r = 1.0;
  for (int i = 1; i <= big_m - m; ++i) {
    r *= x[i - 1];
  }
  if (m != 1) {
    r *= 1.0 - x[big_m - m];
  }
  return correct_to_01(r);
}

double convex(std::span<const double> x, int m, int big_m) {
  double r = 1.0;
  for (int i = 1; i <= big_m - m; ++i) {
    r *= 1.0 - std::cos(x[i - 1] * kPi / 2.0);
  }
  if (m != 1) {
    r *= 1.0 - std::sin(x[big_m - m] * kPi / 2.0);
  }
  return correct_to_01(r);
}

double concave(std::span<const double> x, int m, int big_m) {
  double r = 1.0;
  for (int i = 1; i <= big_m - m; ++i) {
    r *= std::sin(x[i - 1] * kPi / 2.0);
  }
  if (m != 1) {
    r *= std::cos(x[big_m - m] * kPi / 2.0);
  }
  return correct_to_01(r);
}

double mixed(std::span<const double> x, double a, double alpha) {
  const double tmp = 2.0 * a * kPi;
  return correct_to_01(std::pow(1.0 - x[0] - std::cos(tmp * x[0] + kPi / 2.0) / tmp, alpha));
}

double disc(std::span<const double> x, double a, double alpha, double beta) {
  const double tmp = a * std::pow(x[0], beta) * kPi;
  return correct_to_01(1.0 - std::pow(x[0], alpha) * std::pow(std::cos(tmp), 2.0));
}

ObjectiveVector shape_values(int which, int big_m, std::span<const double> x) {
  ObjectiveVector h(static_cast<std::size_t>(big_m));
  for (int m = 1; m <= big_m; ++m) {
    double v = 0.0;
    switch (which) {
    case 1:
      v = m < big_m ? convex(x, m, big_m) : mixed(x, 5.0, 1.0);
      break;
    case 2:
      v = m < big_m ? convex(x, m, big_m) : disc(x, 5.0, 1.0, 1.0);
      break;
    case 3:
      v = linear(x, m, big_m);
      break;
    default:
      v = concave(x, m, big_m);
      break;
    }
    h[static_cast<std::size_t>(m - 1)] = v;
  }
  return h;
}

// --- reduction helpers -------------------------------------------------------

/// Position groups of width k/(M-1) reduced with r_sum; last entry reduces the
/// distance block [k, y.size()).
Vec reduce_sum(const Vec& y, int k, int big_m, bool weighted) {
  Vec w(y.size(), 1.0);
  if (weighted) {
    for (std::size_t i = 0; i < w.size(); ++i) {
      w[i] = 2.0 * static_cast<double>(i + 1);
    }
  }
  const std::span<const double> ys(y);
  const std::span<const double> ws(w);
  Vec t;
  const int width = k / (big_m - 1);
  for (int i = 1; i <= big_m - 1; ++i) {
    const auto head = static_cast<std::size_t>((i - 1) * width);
    const auto len = static_cast<std::size_t>(width);
    t.push_back(r_sum(ys.subspan(head, len), ws.subspan(head, len)));
  }
  const auto kk = static_cast<std::size_t>(k);
  t.push_back(r_sum(ys.subspan(kk), ws.subspan(kk)));
  return t;
}

Vec reduce_nonsep(const Vec& y, int k, int big_m) {
  const std::span<const double> ys(y);
  Vec t;
  const int width = k / (big_m - 1);
  for (int i = 1; i <= big_m - 1; ++i) {
    const auto head = static_cast<std::size_t>((i - 1) * width);
    t.push_back(r_nonsep(ys.subspan(head, static_cast<std::size_t>(width)), width));
  }
  const auto kk = static_cast<std::size_t>(k);
  t.push_back(r_nonsep(ys.subspan(kk), static_cast<int>(y.size()) - k));
  return t;
}

void linear_distance(Vec& y, int k) {
  for (std::size_t i = static_cast<std::size_t>(k); i < y.size(); ++i) {
    y[i] = s_linear(y[i], 0.35);
  }
}

constexpr double kParamA = 0.98 / 49.98;

} // namespace

ObjectiveVector wfg_shape(int which, int objectives, std::span<const double> x) {
  ObjectiveVector f = shape_values(which, objectives, x);
  for (std::size_t m = 0; m < f.size(); ++m) {
    f[m] *= 2.0 * static_cast<double>(m + 1);
  }
  return f;
}

ObjectiveVector evaluate_wfg(int which, int objectives, int k, std::span<const double> z) {
  const int n = static_cast<int>(z.size());
  const int big_m = objectives;
  Vec y(z.size());
  for (std::size_t i = 0; i < y.size(); ++i) {
    y[i] = z[i] / (2.0 * static_cast<double>(i + 1));
  }

  Vec t;
  switch (which) {
  case 1: {
    linear_distance(y, k);
    for (int i = k; i < n; ++i) {
      y[i] = b_flat(y[i], 0.8, 0.75, 0.85);
    }
    for (auto& v : y) {
      v = b_poly(v, 0.02);
    }
    t = reduce_sum(y, k, big_m, true);
    break;
  }
  case 2:
  case 3: {
    linear_distance(y, k);
    const int l = n - k;
    Vec y2(y.begin(), y.begin() + k);
    const std::span<const double> ys(y);
    for (int i = k + 1; i <= k + l / 2; ++i) {
      const auto head = static_cast<std::size_t>(k + 2 * (i - k) - 2);
      y2.push_back(r_nonsep(ys.subspan(head, 2), 2));
    }
    t = reduce_sum(y2, k, big_m, false);
    break;
  }
  case 4:
    for (auto& v : y) {
      v = s_multi(v, 30.0, 10.0, 0.35);
    }
    t = reduce_sum(y, k, big_m, false);
    break;
  case 5:
    for (auto& v : y) {
      v = s_decept(v, 0.35, 0.001, 0.05);
    }
    t = reduce_sum(y, k, big_m, false);
    break;
  case 6:
    linear_distance(y, k);
    t = reduce_nonsep(y, k, big_m);
    break;
  case 7: {
    Vec y1 = y;
    const std::span<const double> ys(y);
    for (int i = 0; i < k; ++i) {
      const double u = r_sum(ys.subspan(static_cast<std::size_t>(i + 1)));
      y1[i] = b_param(y[i], u, kParamA, 0.02, 50.0);
    }
    linear_distance(y1, k);
    t = reduce_sum(y1, k, big_m, false);
    break;
  }
  case 8: {
    Vec y1 = y;
    const std::span<const double> ys(y);
    for (int i = k; i < n; ++i) {
      const double u = r_sum(ys.first(static_cast<std::size_t>(i)));
      y1[i] = b_param(y[i], u, kParamA, 0.02, 50.0);
    }
    linear_distance(y1, k);
    t = reduce_sum(y1, k, big_m, false);
    break;
  }
  case 9: {
    Vec y1 = y;
    const std::span<const double> ys(y);
    for (int i = 0; i < n - 1; ++i) {
      const double u = r_sum(ys.subspan(static_cast<std::size_t>(i + 1)));
      y1[i] = b_param(y[i], u, kParamA, 0.02, 50.0);
    }
    for (int i = 0; i < n; ++i) {
      y1[i] = i < k ? s_decept(y1[i], 0.35, 0.001, 0.05) : s_multi(y1[i], 30.0, 95.0, 0.35);
    }
    t = reduce_nonsep(y1, k, big_m);
    break;
  }
  default:
    throw ContractViolation("evaluate_wfg: problem index out of range");
  }

  // Underlying parameters; WFG3 is degenerate (A = (1, 0, ..., 0)).
  const double t_last = t.back();
  Vec x(static_cast<std::size_t>(big_m - 1));
  for (int i = 0; i < big_m - 1; ++i) {
    const double a = (which == 3 && i > 0) ? 0.0 : 1.0;
    x[i] = std::max(t_last, a) * (t[i] - 0.5) + 0.5;
  }
  ObjectiveVector f = shape_values(which, big_m, x);
  for (std::size_t m = 0; m < f.size(); ++m) {
    f[m] = t_last + 2.0 * static_cast<double>(m + 1) * f[m];
  }
  return f;
}

} // namespace maoea::detail
