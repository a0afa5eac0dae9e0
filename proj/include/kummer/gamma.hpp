#pragma once

// log Gamma, digamma and trigamma: reference evaluators and the Hasse-type
// double series.

#include <cmath>
#include <numbers>

#include "bernoulli.hpp"
#include "numerics.hpp"
#include "zeta.hpp"

namespace kummer {

namespace detail {

inline constexpr double stirling_threshold = 15.0;

inline long double stirling_log_gamma(long double x) {
  const auto& b = bernoulli_table();
  const long double inv = 1.0L / x;
  const long double inv2 = inv * inv;
  long double series = 0.0L;
  long double p = inv;
  for (int k = 1; k <= 10; ++k) {
    series += b[2 * k] / (2.0L * k * (2.0L * k - 1.0L)) * p;
    p *= inv2;
  }
  const long double half_log_two_pi = 0.5L * std::log(2.0L * std::numbers::pi_v<long double>);
  return (x - 0.5L) * std::log(x) - x + half_log_two_pi + series;
}

inline long double asymptotic_digamma(long double x) {
  const auto& b = bernoulli_table();
  const long double inv2 = 1.0L / (x * x);
  long double series = 0.0L;
  long double p = inv2;
  for (int k = 1; k <= 10; ++k) {
    series += b[2 * k] / (2.0L * k) * p;
    p *= inv2;
  }
  return std::log(x) - 0.5L / x - series;
}

}  // namespace detail

/// log Gamma(t), t > 0: Stirling series after upward recurrence to t >= 15.
inline double log_gamma(double t) {
  if (!(t > 0)) throw domain_error("log_gamma: requires t > 0");
  long double x = t;
  long double shift = 0.0L;
  while (x < detail::stirling_threshold) {
    shift += std::log(x);
    x += 1.0L;
  }
  return static_cast<double>(detail::stirling_log_gamma(x) - shift);
}

/// psi(t), t > 0: asymptotic series after upward recurrence.
inline double digamma(double t) {
  if (!(t > 0)) throw domain_error("digamma: requires t > 0");
  long double x = t;
  long double shift = 0.0L;
  while (x < detail::stirling_threshold) {
    shift += 1.0L / x;
    x += 1.0L;
  }
  return static_cast<double>(detail::asymptotic_digamma(x) - shift);
}

/// psi'(t) = zeta(2, t).
inline double trigamma(double t) {
  if (!(t > 0)) throw domain_error("trigamma: requires t > 0");
  return hurwitz_zeta(2.0, t);
}

namespace detail {
inline constexpr int hasse_shift = 24;
}

/// log Gamma(t) from
///   sum_n 1/(n+1) sum_k C(n,k) (-1)^k (t+k) log(t+k) + 1/2 - t + (1/2) log 2 pi,
/// applied at t + M and brought back with log Gamma(t) = log Gamma(t+M) - sum_{j<M} log(t+j).
inline SeriesValue log_gamma_hasse(double t, const EvalOptions& opts = {}) {
  opts.validate();
  if (!(t > 0 && t <= 2)) throw domain_error("log_gamma_hasse: requires 0 < t <= 2");
  const long double x = static_cast<long double>(t) + detail::hasse_shift;
  auto r = hasse_double_series([](long double y) { return y * std::log(y); }, x, 1.0, opts);
  long double acc = 0.5L - x + 0.5L * std::log(2.0L * std::numbers::pi_v<long double>);
  for (int j = detail::hasse_shift - 1; j >= 0; --j) acc -= std::log(static_cast<long double>(t) + j);
  r.value = static_cast<double>(acc + r.value);
  r.converged = r.converged && r.err_estimate <= opts.tolerance_for(r.value);
  return r;
}

/// psi(t) from sum_n 1/(n+1) sum_k C(n,k) (-1)^k log(t+k), applied at t + M
/// and brought back with psi(t) = psi(t+M) - sum_{j<M} 1/(t+j).
inline SeriesValue digamma_hasse(double t, const EvalOptions& opts = {}) {
  opts.validate();
  if (!(t > 0)) throw domain_error("digamma_hasse: requires t > 0");
  const long double x = static_cast<long double>(t) + detail::hasse_shift;
  auto r = hasse_double_series([](long double y) { return std::log(y); }, x, 1.0, opts);
  long double acc = 0.0L;
  for (int j = detail::hasse_shift - 1; j >= 0; --j) acc -= 1.0L / (static_cast<long double>(t) + j);
  r.value = static_cast<double>(acc + r.value);
  r.converged = r.converged && r.err_estimate <= opts.tolerance_for(r.value);
  return r;
}

}  // namespace kummer
