#pragma once

// Summation kernels, acceleration strategies and the shared option/result
// types used by every evaluator in the library.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <functional>
#include <limits>
#include <numbers>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace kummer {

// ---------------------------------------------------------------------------
// Errors
// ---------------------------------------------------------------------------

class error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Argument outside the region where the evaluator (or its series) is valid.
class domain_error : public error {
 public:
  using error::error;
};

/// s = 1 for a Hurwitz-type evaluator.
class pole_error : public domain_error {
 public:
  using domain_error::domain_error;
};

/// Logarithmic or algebraic singularity at the requested point.
class singularity_error : public domain_error {
 public:
  using domain_error::domain_error;
};

/// Polynomial degree beyond what binary64 coefficients support.
class degree_limit_error : public domain_error {
 public:
  using domain_error::domain_error;
};

class convergence_error : public error {
 public:
  using error::error;
};

// ---------------------------------------------------------------------------
// Options and results
// ---------------------------------------------------------------------------

struct EvalOptions {
  double abs_tol = 1e-10;
  double rel_tol = 1e-12;
  std::int64_t max_terms = 100000;
  double tail_window_fraction = 0.1;
  int quad_max_level = 12;
  std::uint64_t seed = 0xC0FFEE;

  void validate() const {
    if (!(abs_tol > 0)) throw domain_error("EvalOptions: abs_tol must be > 0");
    if (!(rel_tol > 0)) throw domain_error("EvalOptions: rel_tol must be > 0");
    if (max_terms < 8) throw domain_error("EvalOptions: max_terms must be >= 8");
    if (!(tail_window_fraction > 0 && tail_window_fraction <= 1))
      throw domain_error("EvalOptions: tail_window_fraction must lie in (0,1]");
    if (quad_max_level < 1) throw domain_error("EvalOptions: quad_max_level must be >= 1");
  }

  double tolerance_for(double value) const { return std::max(abs_tol, rel_tol * std::fabs(value)); }
};

/// Result of every series evaluator.
struct SeriesValue {
  double value = 0.0;
  double err_estimate = 0.0;
  std::int64_t terms_used = 0;
  bool converged = false;
};

inline SeriesValue make_series_value(double value, double err, std::int64_t terms, const EvalOptions& opts) {
  err = std::fabs(err);
  return SeriesValue{value, err, terms, err <= opts.tolerance_for(value)};
}

// ---------------------------------------------------------------------------
// Trigonometric helpers with exact reduction of the argument modulo 2
// ---------------------------------------------------------------------------

/// sin(pi x); exact zeros at integers and exact +-1 at half-integers.
inline double sin_pi(double x) {
  double r = std::remainder(x, 2.0);  // exact, r in [-1, 1]
  if (r > 0.5)
    r = 1.0 - r;
  else if (r < -0.5)
    r = -1.0 - r;
  return std::sin(std::numbers::pi * r);
}

/// cos(pi x); exact zeros at half-integers.
inline double cos_pi(double x) {
  double r = std::fabs(std::remainder(x, 2.0));  // [0, 1]
  return std::sin(std::numbers::pi * (0.5 - r));
}

// ---------------------------------------------------------------------------
// Compensated summation
// ---------------------------------------------------------------------------

/// Neumaier (improved Kahan-Babuska) accumulator.
class CompensatedSum {
 public:
  CompensatedSum& add(double x) {
    const double t = sum_ + x;
    if (std::fabs(sum_) >= std::fabs(x))
      comp_ += (sum_ - t) + x;
    else
      comp_ += (x - t) + sum_;
    sum_ = t;
    return *this;
  }
  CompensatedSum& operator+=(double x) { return add(x); }
  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

inline double compensated_sum(std::span<const double> terms) {
  CompensatedSum acc;
  for (double x : terms) acc.add(x);
  return acc.value();
}

// ---------------------------------------------------------------------------
// Euler transformation of alternating series
// ---------------------------------------------------------------------------

/// Sums sum_{n>=1} (-1)^{n+1} a(n) for a(n) >= 0, eventually decreasing.
///
/// Incremental Euler transformation: each new term updates the table of
/// averaged differences, and the increment added to the sum is taken from the
/// last transformed column. The run stops once three consecutive increments
/// fall below the tolerance; err_estimate is the largest of those increments.
template <class TermMagnitude>
SeriesValue euler_transform_alternating(TermMagnitude&& a, const EvalOptions& opts) {
  std::vector<double> w;
  w.reserve(64);
  CompensatedSum sum;
  std::size_t nterm = 0;
  int quiet = 0;
  double recent_err = 0.0;
  for (std::int64_t j = 1; j <= opts.max_terms; ++j) {
    const double term = (j % 2 == 1 ? 1.0 : -1.0) * static_cast<double>(a(j));
    double inc;
    if (j == 1) {
      w.assign(1, term);
      nterm = 1;
      inc = 0.5 * term;
    } else {
      double tmp = w[0];
      w[0] = term;
      for (std::size_t i = 1; i < nterm; ++i) {
        const double dum = w[i];
        w[i] = 0.5 * (w[i - 1] + tmp);
        tmp = dum;
      }
      if (w.size() <= nterm) w.resize(nterm + 1);
      w[nterm] = 0.5 * (w[nterm - 1] + tmp);
      if (std::fabs(w[nterm]) <= std::fabs(w[nterm - 1])) {
        inc = 0.5 * w[nterm];
        ++nterm;
      } else {
        inc = w[nterm];
      }
    }
    sum.add(inc);
    const double tol = opts.tolerance_for(sum.value());
    if (std::fabs(inc) <= 0.1 * tol && j > 4) {
      recent_err = std::max(recent_err, std::fabs(inc));
      if (++quiet >= 3) return SeriesValue{sum.value(), recent_err, j, true};
    } else {
      quiet = 0;
      recent_err = 0.0;
    }
  }
  const double v = sum.value();
  return SeriesValue{v, std::fabs(w.empty() ? v : w[nterm - 1]), opts.max_terms, false};
}

// ---------------------------------------------------------------------------
// Tail averaging for conditionally convergent series
// ---------------------------------------------------------------------------

/// Mean of the partial sums S(N - W + 1), ..., S(N) with N = max_terms and
/// W = ceil(tail_window_fraction * N). err_estimate is half the spread of the
/// window; it is a heuristic, not a bound.
///
/// partial_sum_fn is called once for each N in the window, in increasing
/// order.
template <class PartialSum>
SeriesValue tail_averaged_sum(PartialSum&& partial_sum_fn, const EvalOptions& opts) {
  const std::int64_t n = opts.max_terms;
  const auto window = std::max<std::int64_t>(
      1, static_cast<std::int64_t>(std::ceil(opts.tail_window_fraction * static_cast<double>(n))));
  CompensatedSum mean;
  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  for (std::int64_t k = n - window + 1; k <= n; ++k) {
    const double s = partial_sum_fn(k);
    mean.add(s);
    lo = std::min(lo, s);
    hi = std::max(hi, s);
  }
  const double v = mean.value() / static_cast<double>(window);
  return make_series_value(v, 0.5 * (hi - lo), n, opts);
}

/// Tail-averaged value of sum_{n>=1} term(n), accumulating partial sums once.
template <class Term>
SeriesValue tail_averaged_series(Term&& term, const EvalOptions& opts) {
  const std::int64_t n = opts.max_terms;
  const auto window = std::max<std::int64_t>(
      1, static_cast<std::int64_t>(std::ceil(opts.tail_window_fraction * static_cast<double>(n))));
  CompensatedSum partial;
  CompensatedSum mean;
  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  for (std::int64_t k = 1; k <= n; ++k) {
    partial.add(term(k));
    if (k > n - window) {
      const double s = partial.value();
      mean.add(s);
      lo = std::min(lo, s);
      hi = std::max(hi, s);
    }
  }
  const double v = mean.value() / static_cast<double>(window);
  return make_series_value(v, 0.5 * (hi - lo), n, opts);
}

// ---------------------------------------------------------------------------
// Hasse-type double series
// ---------------------------------------------------------------------------

/// scale * sum_{n>=0} 1/(n+1) sum_{k<=n} C(n,k) (-1)^k f(x+k).
///
/// f is called with long double abscissae x + n, and the forward differences
/// are formed in long double, since their cancellation grows like 2^n. The
/// outer terms are not monotone, so the run stops only after 8 consecutive
/// scaled outer terms below abs_tol; err_estimate is the largest of those
/// trailing terms. It also stops, unconverged, once the rounding floor of the
/// inner sum exceeds both abs_tol and the latest term.
template <class F>
SeriesValue hasse_double_series(F&& f, long double x, double scale, const EvalOptions& opts) {
  CompensatedSum outer;
  int quiet = 0;
  double trailing = 0.0;
  double last = 0.0;
  std::vector<long double> fx;
  long double fmax = 0.0L;
  double noise = 0.0;
  std::int64_t n = 0;
  for (; n < opts.max_terms && quiet < 8; ++n) {
    fx.push_back(static_cast<long double>(f(x + static_cast<long double>(n))));
    fmax = std::max(fmax, std::fabs(fx.back()));
    // Rounding in the alternating inner sum grows like 2^n max|f|.
    noise = static_cast<double>(std::fabs(static_cast<long double>(scale)) * std::ldexp(fmax, static_cast<int>(n)) *
                                std::numeric_limits<long double>::epsilon() / static_cast<long double>(n + 1));
    if (n > 0 && noise > opts.abs_tol && noise > std::fabs(last)) break;
    long double inner = 0.0L;
    long double c = 1.0L;
    for (std::int64_t k = 0; k <= n; ++k) {
      const long double term = c * fx[static_cast<std::size_t>(k)];
      inner += (k % 2 == 0) ? term : -term;
      c = c * static_cast<long double>(n - k) / static_cast<long double>(k + 1);
    }
    last = static_cast<double>(scale * inner / static_cast<long double>(n + 1));
    outer.add(last);
    if (!std::isfinite(last)) break;
    if (std::fabs(last) < opts.abs_tol) {
      ++quiet;
      trailing = std::max(trailing, std::fabs(last));
    } else {
      quiet = 0;
      trailing = 0.0;
    }
  }
  const double v = outer.value();
  if (quiet >= 8) return make_series_value(v, trailing, n, opts);
  const double err = std::isfinite(last) ? std::max(std::fabs(last), noise) : std::numeric_limits<double>::infinity();
  return SeriesValue{v, err, n, false};
}

// ---------------------------------------------------------------------------
// Tails of non-oscillating power-log series
// ---------------------------------------------------------------------------

/// sum_{n>N} log^j(n) / n^p for j in {0, 1} and p > 1, by Euler-Maclaurin
/// with the exact tail integral and the f'(N)/12 correction.
inline double power_log_tail(double p, int j, std::int64_t big_n) {
  if (!(p > 1)) throw domain_error("power_log_tail: p must exceed 1");
  if (j < 0 || j > 1) throw domain_error("power_log_tail: j must be 0 or 1");
  const double n = static_cast<double>(big_n);
  const double lg = std::log(n);
  const double q = p - 1.0;
  const double np = std::pow(n, -p);
  if (j == 0) {
    const double integral = n * np / q;
    const double f = np;
    const double fp = -p * np / n;
    return integral - 0.5 * f - fp / 12.0;
  }
  const double integral = n * np * (lg / q + 1.0 / (q * q));
  const double f = lg * np;
  const double fp = np / n * (1.0 - p * lg);
  return integral - 0.5 * f - fp / 12.0;
}

// ---------------------------------------------------------------------------
// Trigonometric series with analytic tail
// ---------------------------------------------------------------------------

struct TrigSums {
  SeriesValue cos_sum;
  SeriesValue sin_sum;
};

namespace detail {

/// True when pi * step is a multiple of 2 pi, i.e. the series does not oscillate.
inline bool is_flat_step(double step) { return std::remainder(step, 2.0) == 0.0; }

}  // namespace detail

/// Sums sum_{n>=first} c(n) cos(pi (step n + offset)) and the matching sine
/// series. The first max_terms terms are added directly; the remaining tail
/// sum_{n>=m} c(n) z^n with z = exp(i pi step) is estimated by repeated
/// summation by parts,
///
///   sum_{k>=0} z^{m+k} nabla^k c(m+k) / (1 - z)^{k+1},
///
/// which needs c smooth and |1 - z| large compared with 1/N. When the step is
/// a multiple of 2 the series has constant phase and flat_tail(m), the value
/// of sum_{n>=m} c(n), is used instead if the caller supplies one.
template <class Coef, class FlatTail = std::nullptr_t>
TrigSums trig_sums(Coef&& c, double step, double offset, std::int64_t first, const EvalOptions& opts,
                   FlatTail&& flat_tail = nullptr) {
  const std::int64_t n_terms = opts.max_terms;
  CompensatedSum cs, ss;
  double abs_mass = 0.0;
  for (std::int64_t n = first; n < first + n_terms; ++n) {
    const double cn = c(n);
    const double phase = step * static_cast<double>(n) + offset;
    cs.add(cn * cos_pi(phase));
    ss.add(cn * sin_pi(phase));
    abs_mass += std::fabs(cn);
  }
  const std::int64_t m = first + n_terms;
  std::complex<double> tail{0.0, 0.0};
  double tail_err = 0.0;
  const double rounding = 4.0 * std::numeric_limits<double>::epsilon() * abs_mass;

  if (detail::is_flat_step(step)) {
    if constexpr (!std::is_same_v<std::decay_t<FlatTail>, std::nullptr_t>) {
      const double t = flat_tail(m);
      tail = {t * cos_pi(offset), t * sin_pi(offset)};
      tail_err = std::fabs(c(m)) / static_cast<double>(m);
    } else {
      tail_err = std::fabs(c(m)) * static_cast<double>(m);
    }
  } else {
    const std::complex<double> z{cos_pi(step), sin_pi(step)};
    const std::complex<double> one_minus_z = 1.0 - z;
    const double gap = std::abs(one_minus_z);
    if (gap * static_cast<double>(m) < 20.0) {
      // Too close to the non-oscillating case for the expansion to be useful.
      tail_err = std::fabs(c(m)) * static_cast<double>(m);
    } else {
      constexpr int max_order = 10;
      std::vector<double> cv(max_order + 1);
      for (int k = 0; k <= max_order; ++k) cv[k] = c(m + k);
      std::complex<double> denom = one_minus_z;
      double last = std::numeric_limits<double>::infinity();
      for (int k = 0; k <= max_order; ++k) {
        // nabla^k c(m+k) = sum_j (-1)^j C(k,j) c(m+k-j)
        double diff = 0.0;
        double binom = 1.0;
        for (int j = 0; j <= k; ++j) {
          diff += ((j % 2 == 0) ? binom : -binom) * cv[k - j];
          binom = binom * (k - j) / (j + 1);
        }
        const double ph = step * static_cast<double>(m + k) + offset;
        const std::complex<double> zk{cos_pi(ph), sin_pi(ph)};
        const std::complex<double> term = zk * diff / denom;
        const double mag = std::abs(term);
        if (mag > last) break;  // asymptotic regime ended
        tail += term;
        last = mag;
        if (mag <= 1e-18 * std::max(std::abs(tail), 1e-300)) break;
        denom *= one_minus_z;
      }
      tail_err = last;
    }
  }
  const double cv_ = cs.value() + tail.real();
  const double sv_ = ss.value() + tail.imag();
  const std::int64_t used = n_terms;
  return TrigSums{make_series_value(cv_, tail_err + rounding, used, opts),
                  make_series_value(sv_, tail_err + rounding, used, opts)};
}

}  // namespace kummer
