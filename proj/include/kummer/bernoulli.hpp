#pragma once

// Bernoulli numbers and polynomials, Euler polynomials, and their Fourier
// series.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <string>

#include "numerics.hpp"

namespace kummer {

namespace detail {

#if defined(__SIZEOF_FLOAT128__) && !defined(KUMMER_NO_FLOAT128)
using wide = __float128;
#else
using wide = long double;
#endif

inline constexpr int max_bernoulli_index = 64;

// Tangent numbers by the all-positive Brent-Zimmermann recurrence, then
// B_{2k} = (-1)^{k-1} 2k T_k / (4^k (4^k - 1)).
inline std::array<long double, max_bernoulli_index + 1> make_bernoulli_table() {
  constexpr int kmax = max_bernoulli_index / 2;
  std::array<long double, kmax + 1> tan_num{};
  tan_num[1] = 1.0L;
  for (int k = 2; k <= kmax; ++k) tan_num[k] = (k - 1) * tan_num[k - 1];
  for (int k = 2; k <= kmax; ++k)
    for (int j = k; j <= kmax; ++j) tan_num[j] = (j - k) * tan_num[j - 1] + (j - k + 2) * tan_num[j];

  std::array<long double, max_bernoulli_index + 1> b{};
  b[0] = 1.0L;
  b[1] = -0.5L;
  for (int k = 1; k <= kmax; ++k) {
    const long double four_k = std::ldexp(1.0L, 2 * k);
    const long double v = 2.0L * k * tan_num[k] / (four_k * (four_k - 1.0L));
    b[2 * k] = (k % 2 == 1) ? v : -v;
  }
  return b;
}

inline const std::array<long double, max_bernoulli_index + 1>& bernoulli_table() {
  static const auto table = make_bernoulli_table();
  return table;
}

inline void check_degree(int m, int cap, const char* who) {
  if (m < 0) throw domain_error(std::string(who) + ": degree must be nonnegative");
  if (m > cap)
    throw degree_limit_error(std::string(who) + ": degree " + std::to_string(m) + " exceeds limit " +
                             std::to_string(cap));
}

inline wide wide_pow(wide x, int m) {
  wide r = 1;
  wide base = x;
  for (int e = m; e > 0; e >>= 1) {
    if (e & 1) r *= base;
    base *= base;
  }
  return r;
}

}  // namespace detail

/// B_n for 0 <= n <= 64 (B_1 = -1/2).
inline double bernoulli_number(int n) {
  detail::check_degree(n, detail::max_bernoulli_index, "bernoulli_number");
  return static_cast<double>(detail::bernoulli_table()[n]);
}

/// sum_k C(n,k) (-1)^k (x+k)^m, accumulated in extended precision.
inline double forward_difference_power(int n, int m, double x) {
  if (n < 0 || m < 0) throw domain_error("forward_difference_power: negative index");
  detail::wide acc = 0;
  detail::wide c = 1;
  for (int k = 0; k <= n; ++k) {
    const detail::wide term = c * detail::wide_pow(static_cast<detail::wide>(x) + k, m);
    acc += (k % 2 == 0) ? term : -term;
    c = c * (n - k) / (k + 1);
  }
  return static_cast<double>(acc);
}

/// B_m(t) = sum_k C(m,k) B_k t^{m-k}.
inline double bernoulli_poly(int m, double t) {
  detail::check_degree(m, detail::max_bernoulli_index, "bernoulli_poly");
  const auto& b = detail::bernoulli_table();
  // Horner in t over the coefficients C(m,k) B_k of t^{m-k}.
  long double acc = 0.0L;
  long double c = 1.0L;
  std::array<long double, detail::max_bernoulli_index + 1> coef{};
  const int deg = std::min(m, detail::max_bernoulli_index);
  for (int k = 0; k <= deg; ++k) {
    coef[k] = c * b[k];
    c = c * (m - k) / (k + 1);
  }
  for (int k = 0; k <= deg; ++k) acc = acc * t + coef[k];
  return static_cast<double>(acc);
}

/// B_m(t) from the finite double sum sum_{n<=m} 1/(n+1) sum_k C(n,k)(-1)^k (t+k)^m.
inline double bernoulli_poly_hasse(int m, double t) {
  detail::check_degree(m, 20, "bernoulli_poly_hasse");
  detail::wide outer = 0;
  for (int n = 0; n <= m; ++n) {
    detail::wide inner = 0;
    detail::wide c = 1;
    for (int k = 0; k <= n; ++k) {
      const detail::wide term = c * detail::wide_pow(static_cast<detail::wide>(t) + k, m);
      inner += (k % 2 == 0) ? term : -term;
      c = c * (n - k) / (k + 1);
    }
    outer += inner / (n + 1);
  }
  return static_cast<double>(outer);
}

/// E_m(t) = sum_{n<=m} 2^{-n} sum_k C(n,k)(-1)^k (t+k)^m.
inline double euler_poly(int m, double t) {
  detail::check_degree(m, 20, "euler_poly");
  detail::wide outer = 0;
  detail::wide half_pow = 1;
  for (int n = 0; n <= m; ++n) {
    detail::wide inner = 0;
    detail::wide c = 1;
    for (int k = 0; k <= n; ++k) {
      const detail::wide term = c * detail::wide_pow(static_cast<detail::wide>(t) + k, m);
      inner += (k % 2 == 0) ? term : -term;
      c = c * (n - k) / (k + 1);
    }
    outer += half_pow * inner;
    half_pow /= 2;
  }
  return static_cast<double>(outer);
}

namespace detail {

inline double factorial(int n) {
  double f = 1.0;
  for (int k = 2; k <= n; ++k) f *= k;
  return f;
}

inline SeriesValue with_floor(SeriesValue v, double bound, const EvalOptions& opts) {
  v.err_estimate = std::max(v.err_estimate, bound);
  v.converged = v.err_estimate <= opts.tolerance_for(v.value);
  return v;
}

}  // namespace detail

/// B_m(t) from its Fourier series,
///   B_{2N}(t)   = (-1)^{N+1} 2 (2N)!   sum cos(2 n pi t) / (2 pi n)^{2N},
///   B_{2N+1}(t) = (-1)^{N+1} 2 (2N+1)! sum sin(2 n pi t) / (2 pi n)^{2N+1},
/// truncated at N = max_terms with a smooth-tail correction. err_estimate is
/// at least the absolute tail bound 2 m! sum_{n>N} (2 pi n)^{-m}. For m = 1
/// the series is conditionally convergent and is tail averaged.
inline SeriesValue bernoulli_fourier(int m, double t, const EvalOptions& opts = {}) {
  opts.validate();
  if (m < 1) throw domain_error("bernoulli_fourier: m must be >= 1");
  if (m > 64) throw degree_limit_error("bernoulli_fourier: m exceeds 64");
  const bool odd = (m % 2 == 1);
  if (odd && !(t > 0 && t < 1)) {
    if (m == 1 && (t == 0 || t == 1))
      throw domain_error("bernoulli_fourier: m = 1 series converges to 0 at t = 0, 1, not to B_1");
    throw domain_error("bernoulli_fourier: odd m requires 0 < t < 1");
  }
  if (!odd && !(t >= 0 && t <= 1)) throw domain_error("bernoulli_fourier: even m requires 0 <= t <= 1");

  const int big_n = odd ? (m - 1) / 2 : m / 2;
  const double sign = (big_n % 2 == 1) ? 1.0 : -1.0;  // (-1)^{N+1}
  const double scale = sign * 2.0 * detail::factorial(m) / std::pow(2.0 * std::numbers::pi, m);

  if (m == 1) {
    auto v = tail_averaged_series([&](std::int64_t n) { return sin_pi(2.0 * t * n) / static_cast<double>(n); },
                                  opts);
    v.value *= scale;
    v.err_estimate *= std::fabs(scale);
    v.converged = v.err_estimate <= opts.tolerance_for(v.value);
    return v;
  }

  const double p = m;
  auto coef = [p](std::int64_t n) { return std::pow(static_cast<double>(n), -p); };
  auto flat = [p](std::int64_t from) { return power_log_tail(p, 0, from - 1); };
  const TrigSums sums = trig_sums(coef, 2.0 * t, 0.0, 1, opts, flat);
  const SeriesValue& raw = odd ? sums.sin_sum : sums.cos_sum;
  const double bound = std::fabs(scale) * power_log_tail(p, 0, opts.max_terms);
  SeriesValue v{scale * raw.value, std::fabs(scale) * raw.err_estimate, raw.terms_used, false};
  return detail::with_floor(v, bound, opts);
}

/// E_d(t) from the odd-harmonic Fourier series (harmonics 2n+1, n >= 0),
///   d even, k = d/2:     E_d = (-1)^k 4 d! / pi^{d+1} sum sin((2n+1) pi t) / (2n+1)^{d+1},
///   d odd,  k = (d+1)/2: E_d = (-1)^k 4 d! / pi^{d+1} sum cos((2n+1) pi t) / (2n+1)^{d+1}.
/// d = 0 is conditionally convergent and is tail averaged.
inline SeriesValue euler_fourier(int d, double t, const EvalOptions& opts = {}) {
  opts.validate();
  if (d < 0) throw domain_error("euler_fourier: degree must be >= 0");
  if (d > 64) throw degree_limit_error("euler_fourier: degree exceeds 64");
  if (!(t > 0 && t < 1)) throw domain_error("euler_fourier: requires 0 < t < 1");
  const bool even = (d % 2 == 0);
  const int k = even ? d / 2 : (d + 1) / 2;
  const double sign = (k % 2 == 0) ? 1.0 : -1.0;
  const double scale = sign * 4.0 * detail::factorial(d) / std::pow(std::numbers::pi, d + 1);

  if (d == 0) {
    auto v = tail_averaged_series(
        [&](std::int64_t n1) {
          const double h = static_cast<double>(2 * n1 - 1);
          return sin_pi(h * t) / h;
        },
        opts);
    v.value *= scale;
    v.err_estimate *= std::fabs(scale);
    v.converged = v.err_estimate <= opts.tolerance_for(v.value);
    return v;
  }

  const double p = d + 1;
  auto coef = [p](std::int64_t n) { return std::pow(static_cast<double>(2 * n + 1), -p); };
  const TrigSums sums = trig_sums(coef, 2.0 * t, t, 0, opts);
  const SeriesValue& raw = even ? sums.sin_sum : sums.cos_sum;
  // sum_{n>=N} (2n+1)^{-p} <= (2N-1)^{1-p} / (2(p-1))
  const double n_first = static_cast<double>(2 * opts.max_terms - 1);
  const double bound = std::fabs(scale) * std::pow(n_first, 1.0 - p) / (2.0 * (p - 1.0));
  SeriesValue v{scale * raw.value, std::fabs(scale) * raw.err_estimate, raw.terms_used, false};
  return detail::with_floor(v, bound, opts);
}

}  // namespace kummer
