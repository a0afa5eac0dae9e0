#pragma once

// Clausen functions, log-sine integrals, sine and cosine integrals, Hansen's
// offset sums and the Ci/si trigonometric expansions.

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <optional>
#include <utility>
#include <vector>

#include "barnes.hpp"
#include "constants.hpp"
#include "gamma.hpp"
#include "numerics.hpp"
#include "quadrature.hpp"
#include "zeta.hpp"

namespace kummer {

// ---------------------------------------------------------------------------
// Sine and cosine integrals
// ---------------------------------------------------------------------------

struct SiCiValue {
  double x = 0.0;
  double si_cap = 0.0;    // Si(x)
  double si_small = 0.0;  // si(x) = Si(x) - pi/2
  double ci = 0.0;        // Ci(x), NaN at x = 0
};

namespace detail {

inline SiCiValue make_si_ci(double x, long double si_cap, long double ci) {
  const double si = static_cast<double>(si_cap);
  return SiCiValue{x, si, si - std::numbers::pi / 2, static_cast<double>(ci)};
}

}  // namespace detail

/// Maclaurin series, summed in extended precision:
///   Si(x) = sum (-1)^k x^{2k+1} / ((2k+1)(2k+1)!),
///   Ci(x) = gamma + log x + sum_{k>=1} (-1)^k x^{2k} / (2k (2k)!).
inline SiCiValue si_ci_series(double x) {
  if (!(x >= 0)) throw domain_error("si_ci_series: requires x >= 0");
  const long double xl = x;
  long double si = 0.0L, ci = 0.0L;
  long double p = xl;  // x^{2k+1}/(2k+1)!
  for (int k = 0; k < 200; ++k) {
    const long double ts = p / (2 * k + 1);
    si += (k % 2 == 0) ? ts : -ts;
    p = p * xl / (2 * k + 2);  // x^{2k+2}/(2k+2)!
    const long double tc = p / (2 * k + 2);
    ci += (k % 2 == 0) ? -tc : tc;
    p = p * xl / (2 * k + 3);
    if (std::fabs(ts) < 1e-22L * std::max(1.0L, std::fabs(si)) && k > 2) break;
  }
  const long double ci_full =
      (x == 0.0) ? std::numeric_limits<long double>::quiet_NaN()
                 : static_cast<long double>(constants().euler_gamma) + std::log(xl) + ci;
  return detail::make_si_ci(x, si, ci_full);
}

/// Continued fraction for E1(ix) by the modified Lentz method;
/// Ci(x) = -Re h, Si(x) = pi/2 + Im h with h = e^{-ix} E1(ix) e^{ix} folded in.
inline SiCiValue si_ci_continued_fraction(double x) {
  if (!(x > 0)) throw domain_error("si_ci_continued_fraction: requires x > 0");
  using cplx = std::complex<long double>;
  const long double tiny = 1e-4000L;
  const long double xl = x;
  cplx b(1.0L, xl);
  cplx c(1.0L / tiny, 0.0L);
  cplx d = 1.0L / b;
  cplx h = d;
  for (int i = 2; i < 100000; ++i) {
    const long double a = -static_cast<long double>(i - 1) * (i - 1);
    b += 2.0L;
    d = 1.0L / (a * d + b);
    c = b + a / c;
    const cplx del = c * d;
    h *= del;
    if (std::abs(del - 1.0L) < 1e-19L) break;
  }
  h *= cplx(std::cos(xl), -std::sin(xl));
  return detail::make_si_ci(x, std::numbers::pi_v<long double> / 2 + h.imag(), -h.real());
}

/// Auxiliary functions f, g with Ci = f sin x - g cos x and si = -f cos x - g sin x.
struct AuxFG {
  double f;
  double g;
};

/// f(x) ~ (1/x) sum (-1)^k (2k)!/x^{2k}, g(x) ~ (1/x^2) sum (-1)^k (2k+1)!/x^{2k},
/// each truncated before its smallest term.
inline AuxFG aux_fg_asymptotic(double x) {
  const long double xl = x;
  const long double inv2 = 1.0L / (xl * xl);
  long double f = 0.0L, g = 0.0L;
  long double tf = 1.0L, tg = 1.0L;  // (2k)!/x^{2k}, (2k+1)!/x^{2k}
  long double prev_f = std::numeric_limits<long double>::infinity();
  long double prev_g = prev_f;
  bool f_done = false, g_done = false;
  for (int k = 0; k < 200 && !(f_done && g_done); ++k) {
    if (!f_done) {
      if (tf >= prev_f) {
        f_done = true;
      } else {
        f += (k % 2 == 0) ? tf : -tf;
        prev_f = tf;
      }
    }
    if (!g_done) {
      if (tg >= prev_g) {
        g_done = true;
      } else {
        g += (k % 2 == 0) ? tg : -tg;
        prev_g = tg;
      }
    }
    tf = tf * (2 * k + 1) * (2 * k + 2) * inv2;
    tg = tg * (2 * k + 2) * (2 * k + 3) * inv2;
  }
  return AuxFG{static_cast<double>(f / xl), static_cast<double>(g * inv2)};
}

/// Asymptotic Si and Ci, optimally truncated.
inline SiCiValue si_ci_asymptotic(double x) {
  if (!(x > 0)) throw domain_error("si_ci_asymptotic: requires x > 0");
  const auto fg = aux_fg_asymptotic(x);
  const long double s = std::sin(static_cast<long double>(x));
  const long double c = std::cos(static_cast<long double>(x));
  const long double ci = fg.f * s - fg.g * c;
  const long double si_small = -fg.f * c - fg.g * s;
  return detail::make_si_ci(x, si_small + std::numbers::pi_v<long double> / 2, ci);
}

inline constexpr double si_ci_series_limit = 4.0;
inline constexpr double si_ci_asymptotic_limit = 40.0;

/// Si, si and Ci: Maclaurin series for x <= 4, continued fraction for
/// 4 < x < 40, asymptotic expansions for x >= 40.
inline SiCiValue si_ci(double x) {
  if (!(x >= 0)) throw domain_error("si_ci: requires x >= 0");
  if (x <= si_ci_series_limit) return si_ci_series(x);
  if (x < si_ci_asymptotic_limit) return si_ci_continued_fraction(x);
  return si_ci_asymptotic(x);
}

/// Ci(x); singular at 0.
inline double cos_integral(double x) {
  if (!(x > 0)) throw singularity_error("cos_integral: Ci is singular at x = 0");
  return si_ci(x).ci;
}

/// f(x) and g(x) by whichever branch si_ci uses.
inline AuxFG aux_fg(double x) {
  if (!(x > 0)) throw domain_error("aux_fg: requires x > 0");
  if (x >= si_ci_asymptotic_limit) return aux_fg_asymptotic(x);
  const auto v = si_ci(x);
  const double s = std::sin(x), c = std::cos(x);
  return AuxFG{v.ci * s - v.si_small * c, -v.ci * c - v.si_small * s};
}

// ---------------------------------------------------------------------------
// Clausen functions
// ---------------------------------------------------------------------------

/// Cl_1(x) = -log|2 sin(x/2)|; Cl_{2N}(x) = sum sin(nx)/n^{2N};
/// Cl_{2N+1}(x) = sum cos(nx)/n^{2N+1}.
///
/// Orders >= 2 are summed directly to max_terms with a summation-by-parts
/// tail; err_estimate never exceeds min(zeta(p, N+1), 1/((N+1)^p |sin(x/2)|)).
inline SeriesValue clausen(int order, double x, const EvalOptions& opts = {}) {
  opts.validate();
  if (order < 1) throw domain_error("clausen: order must be >= 1");
  const double step = x / std::numbers::pi;  // Cl(x) terms are trig(pi * step * n)
  if (order == 1) {
    const double s = sin_pi(0.5 * step);
    if (s == 0.0) throw singularity_error("clausen: order 1 is singular at multiples of 2 pi");
    return make_series_value(-std::log(2.0 * std::fabs(s)), 0.0, 0, opts);
  }
  const double p = order;
  auto coef = [p](std::int64_t n) { return std::pow(static_cast<double>(n), -p); };
  auto flat = [p](std::int64_t from) { return hurwitz_zeta(p, static_cast<double>(from)); };
  const TrigSums sums = trig_sums(coef, step, 0.0, 1, opts, flat);
  const SeriesValue& raw = (order % 2 == 0) ? sums.sin_sum : sums.cos_sum;
  const std::int64_t big_n = opts.max_terms;
  double bound = hurwitz_zeta(p, static_cast<double>(big_n + 1));
  const double half_sin = std::fabs(sin_pi(0.5 * step));
  if (half_sin > 0) bound = std::min(bound, std::pow(static_cast<double>(big_n + 1), -p) / half_sin);
  return make_series_value(raw.value, std::min(raw.err_estimate, bound), raw.terms_used, opts);
}

/// Cl_order(2 pi x) from derivatives of the Hurwitz zeta function:
///   Cl_{2N}(2 pi x)   = (-1)^{N+1} (2 pi)^{2N-1}/(2N-1)! [zeta'(1-2N, x) - zeta'(1-2N, 1-x)],  N >= 1,
///   Cl_{2N+1}(2 pi x) = (-1)^N (2 pi)^{2N}/(2N)! [zeta'(-2N, x) + zeta'(-2N, 1-x)],       N >= 0.
inline double clausen_via_zeta(int order, double x_frac) {
  if (order < 1) throw domain_error("clausen_via_zeta: order must be >= 1");
  if (!(x_frac > 0 && x_frac < 1)) throw domain_error("clausen_via_zeta: requires 0 < x_frac < 1");
  const double two_pi = 2.0 * std::numbers::pi;
  if (order % 2 == 0) {
    const int n = order / 2;
    const double s = 1.0 - 2.0 * n;
    const double sign = (n % 2 == 1) ? 1.0 : -1.0;
    const double scale = sign * std::pow(two_pi, 2 * n - 1) / detail::factorial(2 * n - 1);
    return scale * (hurwitz_zeta_sderiv(1, s, x_frac) - hurwitz_zeta_sderiv(1, s, 1.0 - x_frac));
  }
  const int n = (order - 1) / 2;
  const double s = -2.0 * n;
  const double sign = (n % 2 == 0) ? 1.0 : -1.0;
  const double scale = sign * std::pow(two_pi, 2 * n) / detail::factorial(2 * n);
  return scale * (hurwitz_zeta_sderiv(1, s, x_frac) + hurwitz_zeta_sderiv(1, s, 1.0 - x_frac));
}

// ---------------------------------------------------------------------------
// Log-sine integrals
// ---------------------------------------------------------------------------

/// Ls_n(theta) = -int_0^theta log^{n-1}|2 sin(t/2)| dt for n in {2, 3}, 0 < theta <= pi.
inline double log_sine_integral(int n, double theta, const EvalOptions& opts = {}) {
  if (n != 2 && n != 3) throw domain_error("log_sine_integral: n must be 2 or 3");
  if (!(theta > 0 && theta <= std::numbers::pi)) throw domain_error("log_sine_integral: requires 0 < theta <= pi");
  auto f = [n](double t) {
    const double l = std::log(2.0 * std::sin(0.5 * t));
    return (n == 2) ? l : l * l;
  };
  const auto r = integrate(f, 0.0, theta, opts);
  if (!r.converged)
    throw convergence_error("log_sine_integral: quadrature did not converge after " + std::to_string(r.levels_used) +
                            " levels");
  return -r.value;
}

// ---------------------------------------------------------------------------
// Sums of sine integrals
// ---------------------------------------------------------------------------

/// (1/2 pi^2) sum Si(2 n pi)/n^2, evaluated as (1/2 pi^2)[(pi/2) zeta(2) + sum si(2 n pi)/n^2]
/// with si(2 n pi) = -f(2 n pi). The omitted terms are added from the
/// asymptotic series of f:
///   -sum_{n>N} f(2 n pi)/n^2 = -sum_k (-1)^k (2k)!/(2 pi)^{2k+1} zeta(2k+3, N+1).
inline SeriesValue glaisher_si_sum(const EvalOptions& opts = {}) {
  opts.validate();
  const double pi = std::numbers::pi;
  const std::int64_t big_n = opts.max_terms;
  CompensatedSum acc;
  for (std::int64_t n = big_n; n >= 1; --n) {
    const double nn = static_cast<double>(n);
    acc.add(-aux_fg(2.0 * pi * nn).f / (nn * nn));
  }
  const double m = static_cast<double>(big_n + 1);
  double tail = 0.0, last = 0.0;
  double coef = 1.0 / (2.0 * pi);  // (2k)!/(2 pi)^{2k+1}
  for (int k = 0; k < 6; ++k) {
    const double term = ((k % 2 == 0) ? -1.0 : 1.0) * coef * hurwitz_zeta(2.0 * k + 3.0, m);
    tail += term;
    last = std::fabs(term);
    coef *= (2.0 * k + 1.0) * (2.0 * k + 2.0) / (4.0 * pi * pi);
  }
  acc.add(tail);
  acc.add(0.5 * pi * (pi * pi / 6.0));
  const double scale = 1.0 / (2.0 * pi * pi);
  return make_series_value(scale * acc.value(), scale * last, big_n, opts);
}

/// sum si(2 n pi)/n^2, the Si-free part of glaisher_si_sum.
inline SeriesValue si_sum(const EvalOptions& opts = {}) {
  const double pi = std::numbers::pi;
  auto r = glaisher_si_sum(opts);
  r.value = 2.0 * pi * pi * r.value - 0.5 * pi * (pi * pi / 6.0);
  r.err_estimate *= 2.0 * pi * pi;
  r.converged = r.err_estimate <= opts.tolerance_for(r.value);
  return r;
}

// ---------------------------------------------------------------------------
// Hansen's offset sums and the rational-argument sum
// ---------------------------------------------------------------------------

struct HansenSums {
  SeriesValue sin_sum;                // sum sin(n x + y)/n^s
  SeriesValue cos_sum;                // sum cos(n x + y)/n^s
  std::optional<double> sin_closed;   // Hurwitz combination, absent at a cosec pole
  std::optional<double> cos_closed;
};

/// Direct sums for s > 1.5 use the summation-by-parts tail; s <= 1.5 is tail averaged.
inline HansenSums hansen_offset_sums(double s, double x, double y, const EvalOptions& opts = {}) {
  opts.validate();
  if (!(s > 0)) throw domain_error("hansen_offset_sums: requires s > 0");
  if (!(x > 0 && x < 2.0 * std::numbers::pi)) throw domain_error("hansen_offset_sums: requires 0 < x < 2 pi");
  const double pi = std::numbers::pi;
  const double step = x / pi;
  const double offset = y / pi;
  HansenSums out{};
  if (s > 1.5) {
    auto coef = [s](std::int64_t n) { return std::pow(static_cast<double>(n), -s); };
    const TrigSums sums = trig_sums(coef, step, offset, 1, opts);
    out.sin_sum = sums.sin_sum;
    out.cos_sum = sums.cos_sum;
  } else {
    out.sin_sum = tail_averaged_series(
        [&](std::int64_t n) { return sin_pi(step * n + offset) * std::pow(static_cast<double>(n), -s); }, opts);
    out.cos_sum = tail_averaged_series(
        [&](std::int64_t n) { return cos_pi(step * n + offset) * std::pow(static_cast<double>(n), -s); }, opts);
  }
  const double csc_arg = sin_pi(s);
  if (csc_arg != 0.0) {
    const double pre = std::pow(2.0 * pi, s) / (2.0 * std::tgamma(s) * csc_arg);
    const double za = hurwitz_zeta(1.0 - s, x / (2.0 * pi));
    const double zb = hurwitz_zeta(1.0 - s, 1.0 - x / (2.0 * pi));
    const double h = 0.5 * s;
    out.sin_closed = pre * (cos_pi(offset - h) * za - cos_pi(offset + h) * zb);
    out.cos_closed = pre * (sin_pi(offset + h) * zb - sin_pi(offset - h) * za);
  }
  return out;
}

/// lhs = sum sin(2 n pi p/q)/n^s directly; rhs = q^{-s} sum_{j=1}^q sin(2 pi j p/q) zeta(s, j/q).
inline std::pair<double, double> rational_sine_zeta_sum(int p, int q, double s, const EvalOptions& opts = {}) {
  opts.validate();
  if (!(p >= 1 && p <= q)) throw domain_error("rational_sine_zeta_sum: requires 1 <= p <= q");
  if (!(s > 1)) throw domain_error("rational_sine_zeta_sum: requires s > 1");
  const double ratio = static_cast<double>(p) / q;
  auto coef = [s](std::int64_t n) { return std::pow(static_cast<double>(n), -s); };
  // Truncate on a whole number of periods.
  EvalOptions whole = opts;
  whole.max_terms = std::max<std::int64_t>(q, opts.max_terms / q * q);
  const TrigSums sums = trig_sums(coef, 2.0 * ratio, 0.0, 1, whole);
  CompensatedSum rhs;
  for (int j = 1; j <= q; ++j) rhs.add(sin_pi(2.0 * j * ratio) * hurwitz_zeta(s, static_cast<double>(j) / q));
  return {sums.sin_sum.value, std::pow(static_cast<double>(q), -s) * rhs.value()};
}

// ---------------------------------------------------------------------------
// Trigonometric expansions of psi, log Gamma, zeta'(-1, x) and log G
// ---------------------------------------------------------------------------

namespace detail {

/// sum_{n>=1} c_n g(2 n pi x) or c_n f(2 n pi x) with c_n = n^{-q}, plus the
/// tail from the asymptotic series of f or g with Hurwitz zeta power sums.
inline SeriesValue aux_series(bool use_g, double q, double x, const EvalOptions& opts) {
  const double w = 2.0 * std::numbers::pi * x;
  const std::int64_t big_n = opts.max_terms;
  CompensatedSum acc;
  for (std::int64_t n = big_n; n >= 1; --n) {
    const double nn = static_cast<double>(n);
    const auto fg = aux_fg(w * nn);
    acc.add((use_g ? fg.g : fg.f) * std::pow(nn, -q));
  }
  // g(a) ~ sum (-1)^k (2k+1)!/a^{2k+2}, f(a) ~ sum (-1)^k (2k)!/a^{2k+1}
  const double m = static_cast<double>(big_n + 1);
  double tail = 0.0, last = 0.0;
  double fact = use_g ? 1.0 : 1.0;  // (2k+1)! or (2k)!
  for (int k = 0; k < 5; ++k) {
    const double power = use_g ? 2.0 * k + 2.0 : 2.0 * k + 1.0;
    const double term = ((k % 2 == 0) ? 1.0 : -1.0) * fact * std::pow(w, -power) * hurwitz_zeta(power + q, m);
    tail += term;
    last = std::fabs(term);
    fact *= use_g ? (2.0 * k + 2.0) * (2.0 * k + 3.0) : (2.0 * k + 1.0) * (2.0 * k + 2.0);
  }
  acc.add(tail);
  return make_series_value(acc.value(), last, big_n, opts);
}

}  // namespace detail

/// psi(x) = log x - 1/(2x) + 2 sum [cos(2 n pi x) Ci(2 n pi x) + sin(2 n pi x) si(2 n pi x)],
/// where each bracket equals -g(2 n pi x).
inline SeriesValue norlund_digamma_series(double x, const EvalOptions& opts = {}) {
  opts.validate();
  if (!(x > 0)) throw domain_error("norlund_digamma_series: requires x > 0");
  const auto g = detail::aux_series(true, 0.0, x, opts);
  const double v = std::log(x) - 0.5 / x - 2.0 * g.value;
  return make_series_value(v, 2.0 * g.err_estimate, g.terms_used, opts);
}

/// log Gamma(x) = (1/2) log 2 pi + (x - 1/2) log x - x
///              + (1/pi) sum (1/n) [sin(2 n pi x) Ci(2 n pi x) - cos(2 n pi x) si(2 n pi x)],
/// where each bracket equals f(2 n pi x).
inline SeriesValue loggamma_ci_series(double x, const EvalOptions& opts = {}) {
  opts.validate();
  if (!(x > 0)) throw domain_error("loggamma_ci_series: requires x > 0");
  const auto f = detail::aux_series(false, 1.0, x, opts);
  const double v =
      0.5 * constants().log_two_pi + (x - 0.5) * std::log(x) - x + f.value / std::numbers::pi;
  return make_series_value(v, f.err_estimate / std::numbers::pi, f.terms_used, opts);
}

/// zeta'(-1, x) = -zeta(-1, x) log x - x^2/4 + 1/12
///              - (1/2 pi^2) sum (1/n^2) [cos(2 n pi x) Ci(2 n pi x) + sin(2 n pi x) si(2 n pi x)].
inline SeriesValue elizalde_series(double x, const EvalOptions& opts = {}) {
  opts.validate();
  if (!(x > 0)) throw domain_error("elizalde_series: requires x > 0");
  const auto g = detail::aux_series(true, 2.0, x, opts);
  const double c = 1.0 / (2.0 * std::numbers::pi * std::numbers::pi);
  const double v = -hurwitz_zeta(-1.0, x) * std::log(x) - 0.25 * x * x + 1.0 / 12.0 + c * g.value;
  return make_series_value(v, c * g.err_estimate, g.terms_used, opts);
}

/// x log Gamma(x) - log G(1+x) from
///   (x/4)[-x + 2(x-1) log x] + Cl_2(2 pi x)/(4 pi)
///   - (1/2 pi^2) sum (1/n^2) [cos(2 n pi x) Ci(2 n pi x) + sin(2 n pi x) Si(2 n pi x)]
///   + 1/12 - zeta'(-1) + (1/12) log x.
/// The final (1/12) log x is absent from the classical statement of this
/// expansion, which is off by exactly that amount.
inline SeriesValue barnes_ci_combination(double x, const EvalOptions& opts = {}) {
  opts.validate();
  if (!(x > 0)) throw domain_error("barnes_ci_combination: requires x > 0");
  const double pi = std::numbers::pi;
  // cos a Ci a + sin a Si a = -g(a) + (pi/2) sin a
  const auto g = detail::aux_series(true, 2.0, x, opts);
  const auto cl2 = clausen(2, 2.0 * pi * x, opts);
  const double bracket_sum = -g.value + 0.5 * pi * cl2.value;
  CompensatedSum acc;
  acc.add(0.25 * x * (-x + 2.0 * (x - 1.0) * std::log(x)));
  acc.add(cl2.value / (4.0 * pi));
  acc.add(-bracket_sum / (2.0 * pi * pi));
  acc.add(1.0 / 12.0 - constants().zeta_prime_minus1);
  acc.add(std::log(x) / 12.0);
  const double err = (g.err_estimate + 0.5 * pi * cl2.err_estimate) / (2.0 * pi * pi) + cl2.err_estimate / (4.0 * pi);
  return make_series_value(acc.value(), err, g.terms_used, opts);
}

/// psi(x) solved from Lerch's expansion
///   psi(x) sin pi x + (pi/2) cos pi x + (gamma + log 2 pi) sin pi x
///     = -sum_{n>=1} sin((2n+1) pi x) log((n+1)/n),
/// with the conditionally convergent sum tail averaged. The sign of the sum is
/// often printed as +, which fails already at x = 1/2.
inline SeriesValue digamma_lerch_series(double x, const EvalOptions& opts = {}) {
  opts.validate();
  if (!(x > 0 && x < 1)) throw domain_error("digamma_lerch_series: requires 0 < x < 1");
  const double sx = sin_pi(x);
  if (sx == 0.0) throw domain_error("digamma_lerch_series: sin(pi x) = 0");
  const auto sum = tail_averaged_series(
      [x](std::int64_t n) {
        const double nn = static_cast<double>(n);
        return sin_pi((2.0 * nn + 1.0) * x) * std::log1p(1.0 / nn);
      },
      opts);
  const auto& k = constants();
  const double v =
      (-sum.value - 0.5 * std::numbers::pi * cos_pi(x) - (k.euler_gamma + k.log_two_pi) * sx) / sx;
  return make_series_value(v, sum.err_estimate / std::fabs(sx), sum.terms_used, opts);
}

// ---------------------------------------------------------------------------
// Cotangent series of polynomial integrals
// ---------------------------------------------------------------------------

namespace detail {

inline double poly_eval(const std::vector<double>& c, double x) {
  double acc = 0.0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
  return acc;
}

inline std::vector<double> poly_derivative(const std::vector<double>& c) {
  std::vector<double> d;
  for (std::size_t i = 1; i < c.size(); ++i) d.push_back(static_cast<double>(i) * c[i]);
  return d;
}

}  // namespace detail

/// int_a^b p(x) sin(w x) dx for a polynomial p (coefficients in increasing
/// degree), by repeated integration by parts.
inline double polynomial_sine_integral(const std::vector<double>& p, double w, double a, double b) {
  if (w == 0.0) return 0.0;
  double acc = 0.0;
  double sign = 1.0;
  double wp = w;  // w^{2j+1}
  std::vector<double> q = p;
  while (!q.empty()) {
    const auto dq = detail::poly_derivative(q);
    // int q sin = [-q cos/w + q' sin/w^2]_a^b - (1/w^2) int q'' sin
    const double boundary = (-detail::poly_eval(q, b) * std::cos(w * b) + detail::poly_eval(q, a) * std::cos(w * a)) /
                                wp +
                            (detail::poly_eval(dq, b) * std::sin(w * b) - detail::poly_eval(dq, a) * std::sin(w * a)) /
                                (wp * w);
    acc += sign * boundary;
    sign = -sign;
    wp *= w * w;
    q = detail::poly_derivative(dq);
  }
  return acc;
}

/// Both sides of int_a^b p(x) cot(alpha x/2) dx = 2 sum_{n>=1} int_a^b p(x) sin(alpha n x) dx:
/// the left by quadrature, the right as the partial sum to n_terms.
inline std::pair<double, double> cot_series_sides(const std::vector<double>& p, double alpha, double a, double b,
                                                  int n_terms, const EvalOptions& opts = {}) {
  auto integrand = [&](double x) {
    const double h = 0.5 * alpha * x / std::numbers::pi;  // cot(alpha x / 2) = cos_pi(h)/sin_pi(h)
    return detail::poly_eval(p, x) * cos_pi(h) / sin_pi(h);
  };
  const auto lhs = integrate(integrand, a, b, opts);
  CompensatedSum rhs;
  for (int n = 1; n <= n_terms; ++n) rhs.add(2.0 * polynomial_sine_integral(p, alpha * n, a, b));
  return {lhs.value, rhs.value()};
}

}  // namespace kummer
