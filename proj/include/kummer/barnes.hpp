#pragma once

// log G(1+t) for the Barnes G-function by three routes, and Alexeiewsky's
// closed form for the integral of log Gamma.

#include <cmath>
#include <numbers>

#include "bernoulli.hpp"
#include "constants.hpp"
#include "fourier.hpp"
#include "gamma.hpp"
#include "numerics.hpp"
#include "zeta.hpp"

namespace kummer {

namespace detail {

/// k log(1 + t/k) - t + t^2/(2k) = sum_{m>=3} (-1)^{m+1} t^m / (m k^{m-1}).
inline double barnes_log_factor(double t, double k) {
  const double r = t / k;
  if (std::fabs(r) < 0.05) {
    double term = t * r * r / 3.0;  // m = 3
    double acc = term;
    double pw = t * r * r;          // t^m / k^{m-1}
    for (int m = 4; m < 40; ++m) {
      pw *= -r;
      term = pw / m;
      acc += term;
      if (std::fabs(term) <= 1e-18 * std::fabs(acc)) break;
    }
    return acc;
  }
  return k * std::log1p(r) - t + 0.5 * t * r;
}

}  // namespace detail

/// log G(1+t) from the Weierstrass product
///   G(1+t) = (2 pi)^{t/2} exp[-(gamma t^2 + t^2 + t)/2] prod_k (1 + t/k)^k exp(t^2/(2k) - t),
/// summed in log form to K = max_terms factors. The omitted factors are
/// added as sum_{m>=3} (-1)^{m+1} t^m/m sum_{k>K} k^{1-m}, with the power sums
/// from Euler-Maclaurin.
inline SeriesValue log_barnes_g_product(double t, const EvalOptions& opts = {}) {
  opts.validate();
  if (!(t > -1)) throw domain_error("log_barnes_g_product: requires t > -1");
  const auto& c = constants();
  const std::int64_t big_k = opts.max_terms;
  CompensatedSum acc;
  for (std::int64_t k = big_k; k >= 1; --k) acc.add(detail::barnes_log_factor(t, static_cast<double>(k)));
  double tail = 0.0;
  double last = 0.0;
  double pw = t * t;
  for (int m = 3; m <= 12; ++m) {
    pw *= t;
    const double term = ((m % 2 == 1) ? 1.0 : -1.0) * pw / m * power_log_tail(m - 1.0, 0, big_k);
    tail += term;
    last = std::fabs(term);
    if (last <= 1e-20) break;
  }
  acc.add(tail);
  acc.add(0.5 * t * c.log_two_pi).add(-0.5 * (c.euler_gamma * t * t + t * t + t));
  // Euler-Maclaurin remainder of the leading power sum, O(t^3 / K^4).
  const double kk = static_cast<double>(big_k);
  const double err = std::fabs(t * t * t) / (kk * kk * kk * kk) + last;
  return make_series_value(acc.value(), err, big_k, opts);
}

/// log G(1+t) from the trigonometric series
///   -(1/4 pi) sum sin(2 n pi t)/n^2 + (1/2 pi^2)(log 2 pi + gamma - 3/2) sum cos(2 n pi t)/n^2
///   + (1/2 pi^2) sum cos(2 n pi t) log n / n^2 + t log Gamma(t) + B_2(t)/4 + zeta'(-1),
/// 0 <= t <= 1 (t log Gamma(t) -> 0 as t -> 0).
inline SeriesValue log_barnes_g_fourier(double t, const EvalOptions& opts = {}) {
  opts.validate();
  if (!(t >= 0 && t <= 1)) throw domain_error("log_barnes_g_fourier: requires 0 <= t <= 1");
  const auto& k = constants();
  const auto s = second_order_sums(t, opts);
  const double pi = std::numbers::pi;
  const double c = 1.0 / (2.0 * pi * pi);
  const double a = k.log_two_pi + k.euler_gamma - 1.5;
  const double t_log_gamma = (t == 0.0) ? 0.0 : t * log_gamma(t);
  CompensatedSum acc;
  acc.add(-s.sin2.value / (4.0 * pi)).add(c * a * s.cos2.value).add(c * s.cos2_log.value);
  acc.add(t_log_gamma).add(0.25 * bernoulli_poly(2, t)).add(k.zeta_prime_minus1);
  const double err = s.sin2.err_estimate / (4.0 * pi) + c * std::fabs(a) * s.cos2.err_estimate +
                     c * s.cos2_log.err_estimate;
  return make_series_value(acc.value(), err, s.sin2.terms_used, opts);
}

/// log G(1+t) = zeta'(-1) - zeta'(-1, t) + t log Gamma(t), t > 0.
inline double log_barnes_g_zeta(double t) {
  if (!(t > 0)) throw domain_error("log_barnes_g_zeta: requires t > 0");
  const auto& k = constants();
  return k.zeta_prime_minus1 - hurwitz_zeta_sderiv(1, -1.0, t) + t * log_gamma(t);
}

/// Closed form of the integral of log Gamma over [0, x]:
///   x(1-x)/2 + (x/2) log 2 pi - log G(1+x) + x log Gamma(x),  0 <= x <= 1.
inline double alexeiewsky(double x) {
  if (!(x >= 0 && x <= 1)) throw domain_error("alexeiewsky: requires 0 <= x <= 1");
  if (x == 0.0) return 0.0;
  const auto& k = constants();
  return 0.5 * x * (1.0 - x) + 0.5 * x * k.log_two_pi - log_barnes_g_zeta(x) + x * log_gamma(x);
}

}  // namespace kummer
