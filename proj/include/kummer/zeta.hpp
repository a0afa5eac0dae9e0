#pragma once

// Hurwitz zeta, its s-derivatives, the alternating Hurwitz zeta and the
// real-argument Lerch transcendent.

#include <array>
#include <cmath>
#include <cstdint>
#include <initializer_list>
#include <numbers>
#include <utility>

#include "bernoulli.hpp"
#include "numerics.hpp"

namespace kummer {

namespace detail {

inline constexpr int em_bernoulli_terms = 15;  // B_2 .. B_30

inline bool is_nonpositive_integer(double s) { return s <= 0 && s == std::floor(s); }

/// Direct-term count for the Euler-Maclaurin expansion at exponent s.
inline int em_shift(double s, int order) {
  if (order == 0 && is_nonpositive_integer(s) && s >= -64) return 0;  // expansion terminates
  if (s < -1) return 4;  // larger shifts cancel catastrophically in the direct terms
  return std::max(15, static_cast<int>(std::ceil(std::fabs(s))) + 5);
}

using ext = long double;

inline const std::array<ext, em_bernoulli_terms + 1>& em_coefficients() {
  // B_{2j} / (2j)!
  static const auto table = [] {
    std::array<ext, em_bernoulli_terms + 1> c{};
    ext fact = 1.0L;
    for (int j = 1; j <= em_bernoulli_terms; ++j) {
      fact *= (2.0L * j - 1.0L) * (2.0L * j);
      c[j] = bernoulli_table()[2 * j] / fact;
    }
    return c;
  }();
  return table;
}

/// Derivatives 0..order in s of the asymptotic part
///   x^{-s}/2 + sum_j B_{2j}/(2j)! P_j(s) x^{-s-2j+1},  P_j = s(s+1)...(s+2j-2).
inline std::array<ext, 3> em_bernoulli_part(ext s, ext x, int order) {
  const auto& c = em_coefficients();
  const ext lg = std::log(x);
  std::array<ext, 3> out{};
  const ext h = 0.5L * std::pow(x, -s);
  out[0] = h;
  out[1] = -lg * h;
  out[2] = lg * lg * h;
  ext p = 1.0L, p1 = 0.0L, p2 = 0.0L;
  ext xp = std::pow(x, -s + 1.0L);
  const ext inv_x2 = 1.0L / (x * x);
  for (int j = 1; j <= em_bernoulli_terms; ++j) {
    const int lo = (j == 1) ? 0 : 2 * j - 3;
    for (int i = lo; i <= 2 * j - 2; ++i) {
      p2 = p2 * (s + i) + 2.0L * p1;
      p1 = p1 * (s + i) + p;
      p = p * (s + i);
    }
    xp *= inv_x2;  // x^{-s-2j+1}
    const ext w = c[j] * xp;
    out[0] += w * p;
    if (order >= 1) out[1] += w * (p1 - p * lg);
    if (order >= 2) out[2] += w * (p2 - 2.0L * p1 * lg + p * lg * lg);
  }
  return out;
}

/// Derivatives 0..order in s of sum_{k<M} (t+k)^{-s}.
inline std::array<ext, 3> em_direct_part(ext s, ext t, int m, int order) {
  std::array<ext, 3> acc{};
  for (int k = m - 1; k >= 0; --k) {  // smallest terms first
    const ext y = t + k;
    const ext v = std::pow(y, -s);
    acc[0] += v;
    if (order >= 1) {
      const ext l = std::log(y);
      acc[1] += -l * v;
      if (order >= 2) acc[2] += l * l * v;
    }
  }
  return acc;
}

/// Derivatives 0..order of zeta(s, t) by Euler-Maclaurin.
inline std::array<ext, 3> em_hurwitz(ext s, ext t, int order) {
  const int m = em_shift(static_cast<double>(s), order);
  const ext x = t + m;
  auto out = em_direct_part(s, t, m, order);
  const auto tail = em_bernoulli_part(s, x, order);
  const ext lg = std::log(x);
  const ext inv = 1.0L / (s - 1.0L);
  const ext f = std::pow(x, 1.0L - s) * inv;  // x^{1-s}/(s-1)
  const ext a = lg + inv;
  out[0] += f + tail[0];
  out[1] += -f * a + tail[1];
  out[2] += f * a * a + f * inv * inv + tail[2];
  return out;
}

inline void check_hurwitz_args(double s, double t, const char* who) {
  if (!(t > 0)) throw domain_error(std::string(who) + ": t must be > 0");
  if (s == 1.0) throw pole_error(std::string(who) + ": pole at s = 1");
  if (!std::isfinite(s)) throw domain_error(std::string(who) + ": s must be finite");
}

}  // namespace detail

/// zeta(s, t) by Euler-Maclaurin: M direct terms plus Bernoulli corrections to B_30.
inline double hurwitz_zeta(double s, double t) {
  detail::check_hurwitz_args(s, t, "hurwitz_zeta");
  return static_cast<double>(detail::em_hurwitz(s, t, 0)[0]);
}

/// d^order/ds^order zeta(s, t) for order 1 or 2, by termwise differentiation
/// of the Euler-Maclaurin expansion.
inline double hurwitz_zeta_sderiv(int order, double s, double t) {
  if (order != 1 && order != 2) throw domain_error("hurwitz_zeta_sderiv: order must be 1 or 2");
  detail::check_hurwitz_args(s, t, "hurwitz_zeta_sderiv");
  return static_cast<double>(detail::em_hurwitz(s, t, order)[order]);
}

/// zeta(s, a) - zeta(s, b) with the 1/(s-1) parts combined, so s = 1 is allowed.
inline double hurwitz_zeta_difference(double s, double a, double b) {
  using detail::ext;
  if (!(a > 0 && b > 0)) throw domain_error("hurwitz_zeta_difference: parameters must be > 0");
  const int m = detail::em_shift(s, 0);
  const ext xa = static_cast<ext>(a) + m;
  const ext xb = static_cast<ext>(b) + m;
  const auto da = detail::em_direct_part(s, a, m, 0);
  const auto db = detail::em_direct_part(s, b, m, 0);
  const auto ta = detail::em_bernoulli_part(s, xa, 0);
  const auto tb = detail::em_bernoulli_part(s, xb, 0);
  // (xa^u - xb^u) / (-u) with u = 1 - s; limit log(xb/xa) at u = 0.
  const ext u = 1.0L - static_cast<ext>(s);
  const ext ell = std::log(xa / xb);
  const ext lead = (u == 0.0L) ? -ell : -std::pow(xb, u) * std::expm1(u * ell) / u;
  return static_cast<double>((da[0] - db[0]) + lead + (ta[0] - tb[0]));
}

/// sum_i c_i zeta(s, t_i), accumulated in extended precision and rounded once.
inline double hurwitz_zeta_combination(double s, std::initializer_list<std::pair<double, double>> terms) {
  detail::ext acc = 0.0L;
  for (const auto& [c, t] : terms) {
    detail::check_hurwitz_args(s, t, "hurwitz_zeta_combination");
    acc += static_cast<detail::ext>(c) * detail::em_hurwitz(s, t, 0)[0];
  }
  return static_cast<double>(acc);
}

/// zeta(s, t) from the globally convergent double series
///   1/(s-1) sum_n 1/(n+1) sum_k C(n,k) (-1)^k (t+k)^{1-s},
/// applied at the shifted parameter t + M with the first M terms added
/// directly. When 1 - s is a nonnegative integer the inner differences
/// vanish for n > 1 - s and no shift is used.
inline SeriesValue hurwitz_zeta_hasse(double s, double t, const EvalOptions& opts = {}) {
  opts.validate();
  detail::check_hurwitz_args(s, t, "hurwitz_zeta_hasse");
  const double e = 1.0 - s;
  const bool poly = (e >= 0 && e == std::floor(e));
  const int shift = poly ? 0 : 24;
  CompensatedSum direct;
  for (int j = shift - 1; j >= 0; --j) direct.add(std::pow(t + j, -s));
  const long double el = e;
  auto r = hasse_double_series([el](long double y) { return std::pow(y, el); },
                               static_cast<long double>(t) + shift, 1.0 / (s - 1.0), opts);
  r.value += direct.value();
  r.converged = r.converged && r.err_estimate <= opts.tolerance_for(r.value);
  return r;
}

/// zeta(s, t) from Hurwitz's Fourier expansion, valid for s < 1 and 0 < t <= 1:
///   2 Gamma(1-s) [ sin(pi s/2) sum cos(2 n pi t)/(2 pi n)^{1-s}
///                + cos(pi s/2) sum sin(2 n pi t)/(2 pi n)^{1-s} ].
/// Both sums are truncated at max_terms with a summation-by-parts tail.
inline SeriesValue hurwitz_zeta_fourier(double s, double t, const EvalOptions& opts = {}) {
  opts.validate();
  if (!(s < 1)) throw domain_error("hurwitz_zeta_fourier: requires s < 1");
  if (!(t > 0 && t <= 1)) throw domain_error("hurwitz_zeta_fourier: requires 0 < t <= 1");
  if (t == 1 && !(s < 0)) throw domain_error("hurwitz_zeta_fourier: t = 1 requires s < 0");
  const double p = 1.0 - s;
  auto coef = [p](std::int64_t n) { return std::pow(static_cast<double>(n), -p); };
  auto flat = [p](std::int64_t from) { return power_log_tail(p, 0, from - 1); };
  const TrigSums sums = trig_sums(coef, 2.0 * t, 0.0, 1, opts, flat);
  const double scale = 2.0 * std::tgamma(p) * std::pow(2.0 * std::numbers::pi, -p);
  const double a = sin_pi(s / 2.0);
  const double b = cos_pi(s / 2.0);
  const double v = scale * (a * sums.cos_sum.value + b * sums.sin_sum.value);
  const double err = std::fabs(scale) * (std::fabs(a) * sums.cos_sum.err_estimate +
                                         std::fabs(b) * sums.sin_sum.err_estimate);
  return make_series_value(v, err, sums.cos_sum.terms_used, opts);
}

// ---------------------------------------------------------------------------
// Alternating Hurwitz zeta  zeta_a(s, t) = sum_{n>=0} (-1)^n (n+t)^{-s}
// ---------------------------------------------------------------------------

/// 2^{-s} [zeta(s, t/2) - zeta(s, (1+t)/2)]; entire in s.
inline double alt_hurwitz_zeta(double s, double t) {
  if (!(t > 0)) throw domain_error("alt_hurwitz_zeta: t must be > 0");
  return std::exp2(-s) * hurwitz_zeta_difference(s, 0.5 * t, 0.5 * (1.0 + t));
}

/// zeta(s, t) - 2^{1-s} zeta(s, (1+t)/2).
inline double alt_hurwitz_zeta_shifted_form(double s, double t) {
  return hurwitz_zeta_combination(s, {{1.0, t}, {-std::exp2(1.0 - s), 0.5 * (1.0 + t)}});
}

/// 2^{1-s} zeta(s, t/2) - zeta(s, t).
inline double alt_hurwitz_zeta_halved_form(double s, double t) {
  return hurwitz_zeta_combination(s, {{std::exp2(1.0 - s), 0.5 * t}, {-1.0, t}});
}

/// (1/(1-z)) sum_n w^n sum_k C(n,k) (-1)^k (t+k)^{-s},  w = -z/(1-z).
///
/// Equals Phi(z, s, t) = sum_n z^n (n+t)^{-s} for -1 <= z < 1/2, where |w| < 1.
/// The inner differences are formed in long double. Their rounding noise
/// grows like (2|w|)^n, so for z > 1/3 the run also stops, unconverged, once
/// that noise floor passes the tolerance.
inline SeriesValue lerch_phi(double z, double s, double t, const EvalOptions& opts = {}) {
  opts.validate();
  if (!(z < 0.5)) throw domain_error("lerch_phi: requires z < 1/2");
  if (!(z >= -1)) throw domain_error("lerch_phi: requires z >= -1");
  if (!(t > 0)) throw domain_error("lerch_phi: t must be > 0");
  using ext = long double;
  const ext w = -static_cast<ext>(z) / (1.0L - z);
  const ext pre = 1.0L / (1.0L - z);
  if (w == 0.0L) return make_series_value(static_cast<double>(pre) * std::pow(t, -s), 0.0, 1, opts);

  std::vector<ext> fx;
  CompensatedSum total;
  ext wn = 1.0L;
  ext fmax = 0.0L;
  int quiet = 0;
  double recent = 0.0;
  double noise = 0.0;
  std::int64_t n = 0;
  for (; n < opts.max_terms; ++n) {
    fx.push_back(std::pow(static_cast<ext>(t) + n, static_cast<ext>(-s)));
    fmax = std::max(fmax, std::fabs(fx.back()));
    ext inner = 0.0L;
    ext c = 1.0L;
    for (std::int64_t k = 0; k <= n; ++k) {
      inner += (k % 2 == 0) ? c * fx[k] : -c * fx[k];
      c = c * static_cast<ext>(n - k) / static_cast<ext>(k + 1);
    }
    const double term = static_cast<double>(pre * wn * inner);
    noise = static_cast<double>(std::fabs(pre * wn) * std::ldexp(fmax, static_cast<int>(n)) *
                                std::numeric_limits<ext>::epsilon());
    if (!std::isfinite(term)) break;
    total.add(term);
    wn *= w;
    const double tol = opts.tolerance_for(total.value());
    if (std::fabs(term) <= 0.01 * tol) {
      recent = std::max(recent, std::fabs(term));
      if (++quiet >= 8) {
        ++n;
        break;
      }
    } else {
      quiet = 0;
      recent = 0.0;
    }
    if (wn == 0.0L) {
      ++n;
      quiet = 8;
      break;
    }
    if (noise > tol) {
      ++n;
      break;
    }
  }
  const double v = total.value();
  const double err = quiet >= 8 ? std::max(recent, noise)
                                : std::max(noise, static_cast<double>(std::fabs(wn * pre)) * std::fabs(v));
  SeriesValue r{v, err, n, false};
  r.converged = quiet >= 8 && r.err_estimate <= opts.tolerance_for(v);
  return r;
}

/// sum_n 2^{-(n+1)} sum_k C(n,k) (-1)^k (t+k)^{-s}, the Euler-transformed
/// alternating series; equals zeta_a(s, t) for every real s.
inline SeriesValue alt_hurwitz_zeta_sondow(double s, double t, const EvalOptions& opts = {}) {
  if (!(t > 0)) throw domain_error("alt_hurwitz_zeta_sondow: t must be > 0");
  return lerch_phi(-1.0, s, t, opts);
}

/// zeta_a(s, t) from Boudjelkha's odd-harmonic Fourier expansion, s < 1:
///   2 Gamma(1-s) pi^{s-1} [ sin(pi s/2) sum_{n>=0} cos((2n+1) pi t)/(2n+1)^{1-s}
///                         + cos(pi s/2) sum_{n>=0} sin((2n+1) pi t)/(2n+1)^{1-s} ].
inline SeriesValue alt_hurwitz_zeta_fourier(double s, double t, const EvalOptions& opts = {}) {
  opts.validate();
  if (!(s < 1)) throw domain_error("alt_hurwitz_zeta_fourier: requires s < 1");
  if (!(t > 0 && t <= 1)) throw domain_error("alt_hurwitz_zeta_fourier: requires 0 < t <= 1");
  if (t == 1 && !(s < 0)) throw domain_error("alt_hurwitz_zeta_fourier: t = 1 requires s < 0");
  const double p = 1.0 - s;
  auto coef = [p](std::int64_t n) { return std::pow(static_cast<double>(2 * n + 1), -p); };
  // sum_{n>=m} (2n+1)^{-p} = 2^{-p} zeta(p, m + 1/2)
  auto flat = [p](std::int64_t from) { return std::exp2(-p) * hurwitz_zeta(p, static_cast<double>(from) + 0.5); };
  const TrigSums sums = trig_sums(coef, 2.0 * t, t, 0, opts, flat);
  const double scale = 2.0 * std::tgamma(p) * std::pow(std::numbers::pi, -p);
  const double a = sin_pi(s / 2.0);
  const double b = cos_pi(s / 2.0);
  const double v = scale * (a * sums.cos_sum.value + b * sums.sin_sum.value);
  const double err = std::fabs(scale) * (std::fabs(a) * sums.cos_sum.err_estimate +
                                         std::fabs(b) * sums.sin_sum.err_estimate);
  return make_series_value(v, err, sums.cos_sum.terms_used, opts);
}

/// zeta_a(-s) for s >= 0 by Hardy's functional equation
///   zeta_a(-s) = 2 (2^{-s-1} - 1)/(2^{-s} - 1) pi^{-s-1} Gamma(1+s) sin(pi s/2) zeta_a(1+s).
/// At s = 0 the analytic limit is returned.
inline double alt_zeta_hardy(double s) {
  if (!(s >= 0)) throw domain_error("alt_zeta_hardy: requires s >= 0");
  const double zeta_a = alt_hurwitz_zeta(1.0 + s, 1.0);
  const double num = 2.0 * (std::exp2(-s - 1.0) - 1.0);
  // sin(pi s/2) / (2^{-s} - 1), with limit -pi/(2 log 2) at s = 0
  const double ratio = (s == 0.0) ? -std::numbers::pi / (2.0 * std::numbers::ln2)
                                  : sin_pi(0.5 * s) / std::expm1(-s * std::numbers::ln2);
  return num * ratio * std::pow(std::numbers::pi, -s - 1.0) * std::tgamma(1.0 + s) * zeta_a;
}

/// Both sides of zeta(s, x) = 2^s zeta(s, 2x) - zeta(s, x + 1/2).
inline std::pair<double, double> hansen_patrick(double s, double x) {
  if (!(x > 0)) throw domain_error("hansen_patrick: x must be > 0");
  const double lhs = hurwitz_zeta(s, x);
  const double rhs = std::exp2(s) * hurwitz_zeta(s, 2.0 * x) - hurwitz_zeta(s, x + 0.5);
  return {lhs, rhs};
}

}  // namespace kummer
