#pragma once

// Double-exponential (tanh-sinh) quadrature on finite intervals.

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "numerics.hpp"

namespace kummer {

struct QuadResult {
  double value = 0.0;
  double err_estimate = 0.0;
  int levels_used = 0;
  bool converged = false;
};

namespace detail {

struct TanhSinhNode {
  double delta;   // 1 - tanh(pi/2 sinh u): distance to the nearer endpoint on [-1, 1]
  double weight;  // pi/2 cosh u / cosh^2(pi/2 sinh u)
};

inline constexpr int tanh_sinh_max_level = 16;
inline constexpr double tanh_sinh_u_max = 6.0;

/// levels[0] holds u = 0, 1, 2, ...; levels[L] the new abscissae u = (2j+1) 2^{-L}.
inline const std::vector<std::vector<TanhSinhNode>>& tanh_sinh_table() {
  static const auto table = [] {
    std::vector<std::vector<TanhSinhNode>> levels(tanh_sinh_max_level + 1);
    auto node = [](double u) {
      const double v = 0.5 * std::numbers::pi * std::sinh(u);
      const double e = std::exp(-2.0 * v);
      const double delta = 2.0 * e / (1.0 + e);  // 2 / (e^{2v} + 1)
      const double sech2 = 4.0 * e / ((1.0 + e) * (1.0 + e));
      return TanhSinhNode{delta, 0.5 * std::numbers::pi * std::cosh(u) * sech2};
    };
    for (int k = 0; k <= static_cast<int>(tanh_sinh_u_max); ++k) levels[0].push_back(node(k));
    for (int level = 1; level <= tanh_sinh_max_level; ++level) {
      const double h = std::ldexp(1.0, -level);
      for (long j = 0;; ++j) {
        const double u = (2 * j + 1) * h;
        if (u > tanh_sinh_u_max) break;
        levels[level].push_back(node(u));
      }
    }
    return levels;
  }();
  return table;
}

}  // namespace detail

/// Integral of f over [a, b] by tanh-sinh quadrature. The step is halved until
/// two successive levels differ by at most max(abs_tol, rel_tol |I|), from
/// level 3 on, or quad_max_level is reached. Abscissae are formed from their
/// distance to the nearer endpoint, so integrable endpoint singularities are
/// never sampled.
template <class F>
QuadResult integrate(F&& f, double a, double b, const EvalOptions& opts = {}) {
  opts.validate();
  if (a == b) return QuadResult{0.0, 0.0, 0, true};
  if (b < a) {
    auto r = integrate(f, b, a, opts);
    r.value = -r.value;
    return r;
  }
  const auto& table = detail::tanh_sinh_table();
  const double half = 0.5 * (b - a);
  const double mid = a + half;
  const int max_level = std::min(opts.quad_max_level, detail::tanh_sinh_max_level);

  CompensatedSum sum;
  auto add_level = [&](int level) {
    for (const auto& nd : table[level]) {
      if (nd.weight == 0.0) continue;
      const double off = half * nd.delta;
      const bool center = (level == 0 && &nd == &table[0].front());
      if (center) {
        sum.add(nd.weight * f(mid));
        continue;
      }
      const double xr = b - off;
      const double xl = a + off;
      if (xr < b && xr > a) sum.add(nd.weight * f(xr));
      if (xl > a && xl < b) sum.add(nd.weight * f(xl));
    }
  };

  add_level(0);
  double prev = half * sum.value();
  double diff = std::numeric_limits<double>::infinity();
  int level = 0;
  for (level = 1; level <= max_level; ++level) {
    add_level(level);
    const double cur = half * std::ldexp(sum.value(), -level);
    diff = std::fabs(cur - prev);
    prev = cur;
    if (level >= 3 && diff <= opts.tolerance_for(cur)) return QuadResult{cur, diff, level, true};
  }
  return QuadResult{prev, diff, max_level, false};
}

/// Sum of integrate over the pieces of [a, b] cut at the listed interior points.
template <class F>
QuadResult integrate_split(F&& f, double a, double b, std::vector<double> singular_points,
                           const EvalOptions& opts = {}) {
  opts.validate();
  if (b < a) {
    auto r = integrate_split(f, b, a, std::move(singular_points), opts);
    r.value = -r.value;
    return r;
  }
  std::vector<double> cuts{a};
  std::sort(singular_points.begin(), singular_points.end());
  for (double p : singular_points) {
    if (p < a || p > b) throw domain_error("integrate_split: singular point outside [a, b]");
    if (p > cuts.back() && p < b) cuts.push_back(p);
  }
  cuts.push_back(b);
  QuadResult total{0.0, 0.0, 0, true};
  CompensatedSum acc;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    const auto r = integrate(f, cuts[i], cuts[i + 1], opts);
    acc.add(r.value);
    total.err_estimate += r.err_estimate;
    total.levels_used = std::max(total.levels_used, r.levels_used);
    total.converged = total.converged && r.converged;
  }
  total.value = acc.value();
  return total;
}

}  // namespace kummer
