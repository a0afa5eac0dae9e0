#pragma once

// Fourier-series routes for log Gamma and zeta'(-1, t).

#include <cmath>
#include <numbers>

#include "constants.hpp"
#include "numerics.hpp"

namespace kummer {

/// The three second-order sums shared by the log G and zeta'(-1, t) series:
///   sin2 = sum sin(2 n pi t)/n^2, cos2 = sum cos(2 n pi t)/n^2,
///   cos2_log = sum cos(2 n pi t) log n / n^2.
struct SecondOrderSums {
  SeriesValue sin2;
  SeriesValue cos2;
  SeriesValue cos2_log;
};

inline SecondOrderSums second_order_sums(double t, const EvalOptions& opts = {}) {
  opts.validate();
  auto inv2 = [](std::int64_t n) {
    const double x = static_cast<double>(n);
    return 1.0 / (x * x);
  };
  auto log2 = [](std::int64_t n) {
    const double x = static_cast<double>(n);
    return std::log(x) / (x * x);
  };
  auto flat0 = [](std::int64_t from) { return power_log_tail(2.0, 0, from - 1); };
  auto flat1 = [](std::int64_t from) { return power_log_tail(2.0, 1, from - 1); };
  const TrigSums plain = trig_sums(inv2, 2.0 * t, 0.0, 1, opts, flat0);
  const TrigSums logged = trig_sums(log2, 2.0 * t, 0.0, 1, opts, flat1);
  return {plain.sin_sum, plain.cos_sum, logged.cos_sum};
}

/// Kummer's series
///   log Gamma(t) = (1/2) log(pi / sin pi t) + [gamma + log 2 pi](1/2 - t)
///                + (1/pi) sum (log n / n) sin 2 pi n t,  0 < t < 1,
/// with the conditionally convergent sum tail averaged.
inline SeriesValue log_gamma_kummer(double t, const EvalOptions& opts = {}) {
  opts.validate();
  if (!(t > 0 && t < 1)) throw domain_error("log_gamma_kummer: requires 0 < t < 1");
  const auto& k = constants();
  const double closed = 0.5 * std::log(std::numbers::pi / sin_pi(t)) + (k.euler_gamma + k.log_two_pi) * (0.5 - t);
  if (t == 0.5) return make_series_value(closed, 0.0, 0, opts);
  auto sum = tail_averaged_series(
      [t](std::int64_t n) {
        const double x = static_cast<double>(n);
        return std::log(x) / x * sin_pi(2.0 * t * x);
      },
      opts);
  const double v = closed + sum.value / std::numbers::pi;
  return make_series_value(v, sum.err_estimate / std::numbers::pi, sum.terms_used, opts);
}

/// zeta'(-1, t) = (1/4 pi) sum sin(2 n pi t)/n^2 - (1/2 pi^2)(log 2 pi + gamma - 1) sum cos(2 n pi t)/n^2
///              - (1/2 pi^2) sum cos(2 n pi t) log n / n^2,  0 < t <= 1.
inline SeriesValue zeta_prime_minus1_fourier(double t, const EvalOptions& opts = {}) {
  opts.validate();
  if (!(t > 0 && t <= 1)) throw domain_error("zeta_prime_minus1_fourier: requires 0 < t <= 1");
  const auto& k = constants();
  const auto s = second_order_sums(t, opts);
  const double pi = std::numbers::pi;
  const double c = 1.0 / (2.0 * pi * pi);
  const double a = k.log_two_pi + k.euler_gamma - 1.0;
  const double v = s.sin2.value / (4.0 * pi) - c * a * s.cos2.value - c * s.cos2_log.value;
  const double err = s.sin2.err_estimate / (4.0 * pi) + c * std::fabs(a) * s.cos2.err_estimate +
                     c * s.cos2_log.err_estimate;
  return make_series_value(v, err, s.sin2.terms_used, opts);
}

}  // namespace kummer
