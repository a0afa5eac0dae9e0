#pragma once

// Registry of numerically checked identities and a parallel grid runner.

#include <algorithm>
#include <atomic>
#include <cmath>
#include <functional>
#include <numbers>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "barnes.hpp"
#include "bernoulli.hpp"
#include "constants.hpp"
#include "fourier.hpp"
#include "gamma.hpp"
#include "numerics.hpp"
#include "quadrature.hpp"
#include "trig_series.hpp"
#include "zeta.hpp"

namespace kummer {

/// Unknown identity id in a selection.
class selection_error : public error {
 public:
  using error::error;
};

enum class ConvergenceClass {
  absolute,        // finite sums, absolutely convergent series, quadrature
  tail_corrected,  // slowly convergent sums with an analytic tail
  conditional,     // tail-averaged or plainly truncated sums
};

inline const char* to_string(ConvergenceClass c) {
  switch (c) {
    case ConvergenceClass::absolute: return "absolute";
    case ConvergenceClass::tail_corrected: return "tail_corrected";
    case ConvergenceClass::conditional: return "conditional";
  }
  return "?";
}

/// Largest tolerance permitted in each class.
inline double tolerance_ceiling(ConvergenceClass c) {
  switch (c) {
    case ConvergenceClass::absolute: return 1e-8;
    case ConvergenceClass::tail_corrected: return 1e-6;
    case ConvergenceClass::conditional: return 1e-3;
  }
  return 0.0;
}

struct IdentityCheck {
  enum class Domain {
    grid,      // every GridSpec point
    interior,  // GridSpec points in [0.05, 0.95]
    points,    // the check's own points
    constant,  // evaluated once, no grid point
  };
  using Side = std::function<double(double, const EvalOptions&)>;

  std::string id;
  std::string description;
  std::string paper_ref;
  Domain domain = Domain::grid;
  Side lhs;
  Side rhs;
  double tolerance = 1e-10;
  ConvergenceClass convergence = ConvergenceClass::absolute;
  std::vector<double> points;  // Domain::points only
  bool integral = false;       // at least one side is a quadrature
};

struct IdentityReport {
  std::string id;
  std::optional<double> grid_point;
  double lhs = 0.0;
  double rhs = 0.0;
  double abs_residual = 0.0;
  double tolerance = 0.0;
  bool pass = false;
  std::string paper_ref;
};

struct GridSpec {
  std::vector<double> points{0.01, 0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 0.99};

  void validate() const {
    for (double p : points)
      if (!(p > 0 && p < 1)) throw domain_error("GridSpec: points must lie in (0, 1)");
  }
};

namespace detail {

inline double quad(const std::function<double(double)>& f, double a, double b, const EvalOptions& opts) {
  return integrate(f, a, b, opts).value;
}

inline double log_sin_pi(double t) { return std::log(sin_pi(t)); }

/// The double sum of the Hasse-type log Gamma series, D(t) = log Gamma(t) - 1/2 + t - (1/2) log 2 pi.
inline double hasse_log_sum(double t, const EvalOptions& opts) {
  return log_gamma_hasse(t, opts).value - 0.5 + t - 0.5 * constants().log_two_pi;
}

inline double zeta_prime_m1_odd_part(double t) {
  return hurwitz_zeta_sderiv(1, -1.0, t) - hurwitz_zeta_sderiv(1, -1.0, 1.0 - t);
}

inline std::vector<IdentityCheck> build_registry() {
  using D = IdentityCheck::Domain;
  using C = ConvergenceClass;
  const double pi = std::numbers::pi;
  std::vector<IdentityCheck> r;

  auto add = [&r](IdentityCheck c) { r.push_back(std::move(c)); };

  // -- Hasse and Hurwitz representations of the Hurwitz zeta function
  add({"EQ-1.1", "Hasse double series for zeta(1/2, t) vs Euler-Maclaurin",
       "Hasse identity for the Hurwitz zeta", D::grid,
       [](double t, const EvalOptions& o) { return hurwitz_zeta_hasse(0.5, t, o).value; },
       [](double t, const EvalOptions&) { return hurwitz_zeta(0.5, t); }, 1e-8});
  add({"EQ-1.3", "Hurwitz Fourier expansion of zeta(-1/2, t) vs Euler-Maclaurin",
       "Hurwitz's formula for the Fourier expansion", D::grid,
       [](double t, const EvalOptions& o) { return hurwitz_zeta_fourier(-0.5, t, o).value; },
       [](double t, const EvalOptions&) { return hurwitz_zeta(-0.5, t); }, 1e-8});

  // -- log Gamma, digamma and trigamma
  add({"EQ-2.4", "s-derivative at s = 1: Hasse double sum vs trigonometric side",
       "differentiating the Hurwitz formula with respect to s", D::interior,
       [](double t, const EvalOptions& o) { return -hasse_log_sum(t, o); },
       [](double t, const EvalOptions& o) {
         const auto& c = constants();
         const auto kum = tail_averaged_series(
             [t](std::int64_t n) {
               const double x = static_cast<double>(n);
               return std::log(x) / x * sin_pi(2.0 * t * x);
             },
             o);
         return 0.5 * std::log(2.0 * sin_pi(t)) - c.log_two_pi * (0.5 - t) - kum.value / std::numbers::pi +
                (1.0 - c.euler_gamma) * (0.5 - t);
       },
       1e-4, C::conditional});
  add({"EQ-2.8", "Hasse double series for log Gamma(t)", "Hasse-type series for log Gamma", D::grid,
       [](double t, const EvalOptions& o) { return log_gamma_hasse(t, o).value; },
       [](double t, const EvalOptions&) { return log_gamma(t); }, 1e-8});
  add({"EQ-2.9", "Kummer's Fourier series for log Gamma(t)", "Kummer's Fourier series", D::interior,
       [](double t, const EvalOptions& o) { return log_gamma_kummer(t, o).value; },
       [](double t, const EvalOptions&) { return log_gamma(t); }, 1e-4, C::conditional});
  add({"EQ-2.10", "Kummer's series at t = 1/2 gives (1/2) log pi", "Kummer's series at t = 1/2", D::constant,
       [](double, const EvalOptions& o) { return log_gamma_kummer(0.5, o).value; },
       [](double, const EvalOptions&) { return 0.5 * std::log(std::numbers::pi); }, 1e-12});
  add({"EQ-2.12", "zeta'(0, t) = zeta(0, t) + Hasse double sum", "Hasse double sum for zeta'(0, t)", D::grid,
       [](double t, const EvalOptions&) { return hurwitz_zeta_sderiv(1, 0.0, t); },
       [](double t, const EvalOptions& o) { return hurwitz_zeta(0.0, t) + hasse_log_sum(t, o); }, 1e-8});
  add({"EQ-2.13", "zeta(-2, t) = -B_3(t)/3", "Hurwitz zeta at negative integers", D::grid,
       [](double t, const EvalOptions&) { return hurwitz_zeta(-2.0, t); },
       [](double t, const EvalOptions&) { return -bernoulli_poly(3, t) / 3.0; }, 1e-12});
  add({"EQ-2.14", "B_5(t) from the Hasse finite double sum", "Bernoulli polynomials from the Hasse sum", D::grid,
       [](double t, const EvalOptions&) { return bernoulli_poly_hasse(5, t); },
       [](double t, const EvalOptions&) { return bernoulli_poly(5, t); }, 1e-12});
  add({"EQ-2.16", "Lerch: zeta'(0, t) = log Gamma(t) - (1/2) log 2 pi", "Lerch's identity", D::grid,
       [](double t, const EvalOptions&) { return hurwitz_zeta_sderiv(1, 0.0, t); },
       [](double t, const EvalOptions&) { return log_gamma(t) - 0.5 * constants().log_two_pi; }, 1e-9});
  add({"EQ-2.17", "Kummer series reflection: L(t) + L(1-t) = log(pi / sin pi t)", "reflection of Kummer's series",
       D::interior,
       [](double t, const EvalOptions& o) { return log_gamma_kummer(t, o).value + log_gamma_kummer(1.0 - t, o).value; },
       [](double t, const EvalOptions&) { return std::log(std::numbers::pi / sin_pi(t)); }, 2e-4, C::conditional});
  add({"EQ-2.18", "Euler's reflection formula for log Gamma", "Euler's reflection formula", D::grid,
       [](double t, const EvalOptions&) { return log_gamma(t) + log_gamma(1.0 - t); },
       [](double t, const EvalOptions&) { return std::log(std::numbers::pi / sin_pi(t)); }, 1e-12});
  add({"EQ-2.19", "Hasse double series for psi(t)", "Hasse-type series for the digamma function", D::grid,
       [](double t, const EvalOptions& o) { return digamma_hasse(t, o).value; },
       [](double t, const EvalOptions&) { return digamma(t); }, 1e-8});
  add({"EQ-2.20", "psi'(t) = zeta(2, t) via the Hasse series", "trigamma equals zeta(2, t)", D::grid,
       [](double t, const EvalOptions&) { return trigamma(t); },
       [](double t, const EvalOptions& o) { return hurwitz_zeta_hasse(2.0, t, o).value; }, 1e-8});

  // -- Integrals
  add({"EQ-3.1", "Parseval: mean square of the Kummer series remainder", "Parseval's theorem applied to Kummer's series",
       D::constant,
       [](double, const EvalOptions& o) {
         const auto& c = constants();
         return quad(
             [&c](double t) {
               const double d = log_gamma(t) - 0.5 * std::log(std::numbers::pi / sin_pi(t)) -
                                (c.euler_gamma + c.log_two_pi) * (0.5 - t);
               return d * d;
             },
             0.0, 1.0, o);
       },
       [](double, const EvalOptions&) {
         return constants().zeta_second_2 / (2.0 * std::numbers::pi * std::numbers::pi);
       },
       1e-8, C::absolute, {}, true});
  add({"EQ-3.3", "Ls_2(pi) = 0", "log-sine integral Ls_2 at pi", D::constant,
       [](double, const EvalOptions& o) { return log_sine_integral(2, std::numbers::pi, o); },
       [](double, const EvalOptions&) { return 0.0; }, 1e-10, C::absolute, {}, true});
  add({"EQ-3.4", "Ls_3(pi) = -pi^3/12", "log-sine integral Ls_3 at pi", D::constant,
       [](double, const EvalOptions& o) { return log_sine_integral(3, std::numbers::pi, o); },
       [pi](double, const EvalOptions&) { return -pi * pi * pi / 12.0; }, 1e-9, C::absolute, {}, true});
  add({"EQ-3.5", "int_0^1 log sin pi t dt = -log 2", "classical log-sine integral", D::constant,
       [](double, const EvalOptions& o) { return quad(log_sin_pi, 0.0, 1.0, o); },
       [](double, const EvalOptions&) { return -std::numbers::ln2; }, 1e-10, C::absolute, {}, true});
  add({"EQ-3.6", "int_0^1 log^2(2 sin pi t) dt = pi^2/12", "mean square of log(2 sin pi t)", D::constant,
       [](double, const EvalOptions& o) {
         return integrate_split(
                    [](double t) {
                      const double l = std::log(2.0 * sin_pi(t));
                      return l * l;
                    },
                    0.0, 1.0, {0.5}, o)
             .value;
       },
       [pi](double, const EvalOptions&) { return pi * pi / 12.0; }, 1e-9, C::absolute, {}, true});
  add({"EQ-3.7", "int_0^1 log^2 sin pi t dt = pi^2/12 + log^2 2", "Bremekamp's integral", D::constant,
       [](double, const EvalOptions& o) {
         return integrate_split(
                    [](double t) {
                      const double l = log_sin_pi(t);
                      return l * l;
                    },
                    0.0, 1.0, {0.5}, o)
             .value;
       },
       [pi](double, const EvalOptions&) { return pi * pi / 12.0 + std::numbers::ln2 * std::numbers::ln2; }, 1e-9,
       C::absolute, {}, true});
  auto log_gamma1_log2sin = [](const EvalOptions& o) {
    return quad([](double x) { return log_gamma(x + 1.0) * std::log(2.0 * sin_pi(x)); }, 0.0, 1.0, o);
  };
  add({"EQ-3.8", "int_0^1 log Gamma(x+1) log(2 sin pi x) dx = (1/2 pi) sum si(2 n pi)/n^2",
       "integral of log Gamma(x+1) log(2 sin pi x) as a sum of sine integrals", D::constant,
       [log_gamma1_log2sin](double, const EvalOptions& o) { return log_gamma1_log2sin(o); },
       [](double, const EvalOptions& o) { return si_sum(o).value / (2.0 * std::numbers::pi); }, 1e-6,
       C::tail_corrected, {}, true});
  add({"EQ-3.9", "(1/2 pi^2) sum Si(2 n pi)/n^2 = log A - 1/4", "sum of Si(2 n pi)/n^2 against log A", D::constant,
       [](double, const EvalOptions& o) { return glaisher_si_sum(o).value; },
       [](double, const EvalOptions&) { return constants().log_glaisher - 0.25; }, 1e-6, C::tail_corrected});
  add({"EQ-3.10", "int_0^1 log Gamma(x+1) log(2 sin pi x) dx = pi log A - pi/4 - zeta(2)/4",
       "closed form built on the Si-sum value", D::constant,
       [log_gamma1_log2sin](double, const EvalOptions& o) { return log_gamma1_log2sin(o); },
       [pi](double, const EvalOptions&) {
         return pi * constants().log_glaisher - pi / 4.0 - pi * pi / 24.0;
       },
       1e-6, C::tail_corrected, {}, true});
  auto log_x_log_sin = [](const EvalOptions& o) {
    return integrate_split([](double x) { return std::log(x) * log_sin_pi(x); }, 0.0, 1.0, {0.5}, o).value;
  };
  add({"EQ-3.11", "int_0^1 log x log sin pi x dx = log 2 + (1/2 pi) sum Si(2 n pi)/n^2",
       "integral of log x log sin pi x as a sum of sine integrals", D::constant,
       [log_x_log_sin](double, const EvalOptions& o) { return log_x_log_sin(o); },
       [pi](double, const EvalOptions& o) { return std::numbers::ln2 + glaisher_si_sum(o).value * pi; }, 1e-6,
       C::tail_corrected, {}, true});
  add({"EQ-3.11-closed", "int_0^1 log x log sin pi x dx = pi log A - pi/4 + log 2",
       "closed form built on the Si-sum value", D::constant,
       [log_x_log_sin](double, const EvalOptions& o) { return log_x_log_sin(o); },
       [pi](double, const EvalOptions&) {
         return pi * constants().log_glaisher - pi / 4.0 + std::numbers::ln2;
       },
       1e-6, C::tail_corrected, {}, true});
  add({"EQ-3.12", "int_0^1 log Gamma(x) log sin pi x dx = -(1/2) log 2 log 2 pi - pi^2/24",
       "log Gamma against log sin on the unit interval", D::constant,
       [](double, const EvalOptions& o) {
         return integrate_split([](double x) { return log_gamma(x) * log_sin_pi(x); }, 0.0, 1.0, {0.5}, o).value;
       },
       [pi](double, const EvalOptions&) {
         return -0.5 * std::numbers::ln2 * constants().log_two_pi - pi * pi / 24.0;
       },
       1e-8, C::absolute, {}, true});
  add({"EQ-3.13", "int_0^1 B_{2n+1}(t) log sin pi t dt = 0, n = 0, 1", "odd Bernoulli moments of log sin", D::points,
       [](double n, const EvalOptions& o) {
         const int m = 2 * static_cast<int>(n) + 1;
         return quad([m](double t) { return bernoulli_poly(m, t) * log_sin_pi(t); }, 0.0, 1.0, o);
       },
       [](double, const EvalOptions&) { return 0.0; }, 1e-10, C::absolute, {0.0, 1.0}, true});
  add({"EQ-3.14", "int_0^1 B_{2n}(t) log sin pi t dt = (-1)^n (2n)! zeta(2n+1)/(2 pi)^{2n}, n = 1, 2",
       "even Bernoulli moments of log sin", D::points,
       [](double n, const EvalOptions& o) {
         const int m = 2 * static_cast<int>(n);
         return quad([m](double t) { return bernoulli_poly(m, t) * log_sin_pi(t); }, 0.0, 1.0, o);
       },
       [pi](double n, const EvalOptions&) {
         const int m = 2 * static_cast<int>(n);
         const double sign = (static_cast<int>(n) % 2 == 0) ? 1.0 : -1.0;
         return sign * factorial(m) * hurwitz_zeta(m + 1.0, 1.0) / std::pow(2.0 * pi, m);
       },
       1e-9, C::absolute, {1.0, 2.0}, true});
  add({"EQ-3.15", "cotangent series for int_0^1 x^2 (1-x)^2 cot(pi x) dx, N = 200", "the basic cotangent identity",
       D::constant,
       [pi](double, const EvalOptions& o) {
         return cot_series_sides({0.0, 0.0, 1.0, -2.0, 1.0}, 2.0 * pi, 0.0, 1.0, 200, o).first;
       },
       [pi](double, const EvalOptions& o) {
         return cot_series_sides({0.0, 0.0, 1.0, -2.0, 1.0}, 2.0 * pi, 0.0, 1.0, 200, o).second;
       },
       1e-5, C::conditional, {}, true});
  add({"EQ-3.16", "int_0^1 B_{2n-1}(t) log Gamma(t) dt, n = 1, 2", "odd Bernoulli moments of log Gamma", D::points,
       [](double n, const EvalOptions& o) {
         const int m = 2 * static_cast<int>(n) - 1;
         return quad([m](double t) { return bernoulli_poly(m, t) * log_gamma(t); }, 0.0, 1.0, o);
       },
       [](double n, const EvalOptions&) {
         const auto& c = constants();
         const double m = 2.0 * n;
         return bernoulli_number(static_cast<int>(m)) / m *
                (hurwitz_zeta_sderiv(1, m, 1.0) / hurwitz_zeta(m, 1.0) - c.log_two_pi - c.euler_gamma);
       },
       1e-8, C::absolute, {1.0, 2.0}, true});
  add({"EQ-3.17", "int_0^1 B_{2n}(t) log Gamma(t) dt = -zeta'(-2n), n = 1, 2", "even Bernoulli moments of log Gamma",
       D::points,
       [](double n, const EvalOptions& o) {
         const int m = 2 * static_cast<int>(n);
         return quad([m](double t) { return bernoulli_poly(m, t) * log_gamma(t); }, 0.0, 1.0, o);
       },
       [](double n, const EvalOptions&) { return -hurwitz_zeta_sderiv(1, -2.0 * n, 1.0); }, 1e-8, C::absolute,
       {1.0, 2.0}, true});
  add({"EQ-3.18", "int_0^1 (1/2 - t) log Gamma(t) dt = log A", "first moment of log Gamma and log A", D::constant,
       [](double, const EvalOptions& o) {
         return quad([](double t) { return (0.5 - t) * log_gamma(t); }, 0.0, 1.0, o);
       },
       [](double, const EvalOptions&) { return constants().log_glaisher; }, 1e-8, C::absolute, {}, true});
  add({"EQ-3.19", "int_0^1 log^2 Gamma(t) dt in closed form", "mean square of log Gamma", D::constant,
       [](double, const EvalOptions& o) {
         return quad(
             [](double t) {
               const double l = log_gamma(t);
               return l * l;
             },
             0.0, 1.0, o);
       },
       [pi](double, const EvalOptions&) {
         const auto& c = constants();
         const double g = c.euler_gamma, l = c.log_two_pi;
         return g * g / 12.0 + pi * pi / 48.0 + g * l / 6.0 + l * l / 3.0 - (g + l) * c.zeta_prime_2 / (pi * pi) +
                c.zeta_second_2 / (2.0 * pi * pi);
       },
       1e-8, C::absolute, {}, true});

  // -- Barnes G
  add({"EQ-4.1", "Weierstrass product for log G(1+t) vs zeta-derivative route", "Barnes double gamma product",
       D::grid, [](double t, const EvalOptions& o) { return log_barnes_g_product(t, o).value; },
       [](double t, const EvalOptions&) { return log_barnes_g_zeta(t); }, 1e-7, C::tail_corrected});
  add({"EQ-4.3", "trigonometric series for log G(1+t) vs zeta-derivative route",
       "trigonometric series for log G(1+t)", D::grid,
       [](double t, const EvalOptions& o) { return log_barnes_g_fourier(t, o).value; },
       [](double t, const EvalOptions&) { return log_barnes_g_zeta(t); }, 1e-8});
  add({"EQ-4.3-t1", "trigonometric series for log G(2) = 0", "trigonometric series for log G(1+t) at t = 1",
       D::constant, [](double, const EvalOptions& o) { return log_barnes_g_fourier(1.0, o).value; },
       [](double, const EvalOptions&) { return 0.0; }, 1e-10});
  add({"EQ-4.4", "Fourier series of B_2(t)", "Fourier series of the even Bernoulli polynomials", D::grid,
       [](double t, const EvalOptions& o) { return bernoulli_fourier(2, t, o).value; },
       [](double t, const EvalOptions&) { return bernoulli_poly(2, t); }, 1e-8});
  add({"EQ-4.5", "zeta'(2)/(2 pi^2) = (1/12)(log 2 pi + gamma - 1) + zeta'(-1)",
       "differentiating the functional equation", D::constant,
       [pi](double, const EvalOptions&) { return constants().zeta_prime_2 / (2.0 * pi * pi); },
       [](double, const EvalOptions&) {
         const auto& c = constants();
         return (c.log_two_pi + c.euler_gamma - 1.0) / 12.0 + c.zeta_prime_minus1;
       },
       1e-10});
  add({"EQ-4.6", "log G(3/2) = (1/24) log 2 + (1/4) log pi + (3/2) zeta'(-1)", "value of log G(3/2)", D::constant,
       [](double, const EvalOptions& o) { return log_barnes_g_product(0.5, o).value; },
       [pi](double, const EvalOptions&) {
         return std::numbers::ln2 / 24.0 + 0.25 * std::log(pi) + 1.5 * constants().zeta_prime_minus1;
       },
       1e-9});
  add({"EQ-4.7", "log G(1/2) = (1/24) log 2 - (1/4) log pi + (3/2) zeta'(-1)", "value of log G(1/2)", D::constant,
       [](double, const EvalOptions&) { return log_barnes_g_zeta(0.5) - log_gamma(0.5); },
       [pi](double, const EvalOptions&) {
         return std::numbers::ln2 / 24.0 - 0.25 * std::log(pi) + 1.5 * constants().zeta_prime_minus1;
       },
       1e-9});
  const std::vector<double> quarter_points{0.0, 0.25, 0.5, 0.75, 1.0};
  add({"EQ-4.8", "Alexeiewsky: int_0^x log Gamma vs quadrature", "Alexeiewsky's theorem", D::points,
       [](double x, const EvalOptions& o) { return quad([](double t) { return log_gamma(t); }, 0.0, x, o); },
       [](double x, const EvalOptions&) { return alexeiewsky(x); }, 1e-8, C::absolute, quarter_points, true});
  add({"EQ-RAABE", "Raabe: int_x^{x+1} log Gamma = (1/2) log 2 pi + x log x - x", "Raabe's integral", D::points,
       [](double x, const EvalOptions& o) {
         return quad([](double t) { return log_gamma(t); }, x, x + 1.0, o);
       },
       [](double x, const EvalOptions&) {
         return 0.5 * constants().log_two_pi + (x == 0.0 ? 0.0 : x * std::log(x)) - x;
       },
       1e-8, C::absolute, quarter_points, true});

  // -- Gosper, Vardi, Adamchik, Kinkelin
  add({"EQ-5.2", "log G(1+t) - t log Gamma(t) = zeta'(-1) - zeta'(-1, t), product route",
       "Vardi's identity", D::grid,
       [](double t, const EvalOptions& o) { return log_barnes_g_product(t, o).value - t * log_gamma(t); },
       [](double t, const EvalOptions&) {
         return constants().zeta_prime_minus1 - hurwitz_zeta_sderiv(1, -1.0, t);
       },
       1e-7, C::tail_corrected});
  add({"EQ-5.3", "log G(1-t) + t log Gamma(1-t) = zeta'(-1) - zeta'(-1, 1-t), product route",
       "companion of Vardi's identity", D::grid,
       [](double t, const EvalOptions& o) { return log_barnes_g_product(-t, o).value + t * log_gamma(1.0 - t); },
       [](double t, const EvalOptions&) {
         return constants().zeta_prime_minus1 - hurwitz_zeta_sderiv(1, -1.0, 1.0 - t);
       },
       1e-7, C::tail_corrected});
  add({"EQ-5.4", "log G(1+t)/G(1-t) = -(1/2 pi) Cl_2(2 pi t) + t log(pi / sin pi t)", "ratio of Barnes functions",
       D::grid,
       [](double t, const EvalOptions& o) {
         return log_barnes_g_product(t, o).value - log_barnes_g_product(-t, o).value;
       },
       [pi](double t, const EvalOptions& o) {
         return -clausen(2, 2.0 * pi * t, o).value / (2.0 * pi) + t * std::log(pi / sin_pi(t));
       },
       1e-7, C::tail_corrected});
  add({"EQ-5.5", "zeta'(-1, t) - zeta'(-1, 1-t) = (1/2 pi) Cl_2(2 pi t)", "difference previously noted by Adamchik",
       D::grid, [](double t, const EvalOptions&) { return zeta_prime_m1_odd_part(t); },
       [pi](double t, const EvalOptions& o) { return clausen(2, 2.0 * pi * t, o).value / (2.0 * pi); }, 1e-8});
  add({"EQ-5.6", "log G(1+t)/G(1-t) = -t log(sin pi t / 2 pi) + int_0^t log sin pi x dx", "Kinkelin's log-sine form",
       D::grid,
       [](double t, const EvalOptions& o) {
         return log_barnes_g_product(t, o).value - log_barnes_g_product(-t, o).value;
       },
       [pi](double t, const EvalOptions& o) {
         return -t * std::log(sin_pi(t) / (2.0 * pi)) + quad(log_sin_pi, 0.0, t, o);
       },
       1e-7, C::tail_corrected, {}, true});
  auto pi_x_cot = [](double x) { return x == 0.0 ? 1.0 : std::numbers::pi * x * cos_pi(x) / sin_pi(x); };
  add({"EQ-5.7", "log G(1+t)/G(1-t) = t log 2 pi - int_0^t pi x cot pi x dx", "originally found by Kinkelin",
       D::grid,
       [](double t, const EvalOptions&) { return log_barnes_g_zeta(t) - (log_barnes_g_zeta(1.0 - t) - log_gamma(1.0 - t)); },
       [pi_x_cot](double t, const EvalOptions& o) { return t * constants().log_two_pi - quad(pi_x_cot, 0.0, t, o); },
       1e-8, C::absolute, {}, true});
  add({"EQ-5.8", "int_0^t pi x cot pi x dx = zeta'(-1, t) - zeta'(-1, 1-t) + t log(2 sin pi t)",
       "Kinkelin integral via zeta derivatives", D::grid,
       [pi_x_cot](double t, const EvalOptions& o) { return quad(pi_x_cot, 0.0, t, o); },
       [](double t, const EvalOptions&) { return zeta_prime_m1_odd_part(t) + t * std::log(2.0 * sin_pi(t)); }, 1e-8,
       C::absolute, {}, true});
  add({"EQ-5.9", "int_0^t log(2 sin pi x) dx = -[zeta'(-1, t) - zeta'(-1, 1-t)]",
       "partial log-sine integral via zeta derivatives", D::grid,
       [](double t, const EvalOptions& o) {
         return quad([](double x) { return std::log(2.0 * sin_pi(x)); }, 0.0, t, o);
       },
       [](double t, const EvalOptions&) { return -zeta_prime_m1_odd_part(t); }, 1e-8, C::absolute, {}, true});
  add({"EQ-5.10", "int_0^{pi/2} log sin x dx = -(pi/2) log 2", "Euler's integral", D::constant,
       [pi](double, const EvalOptions& o) {
         return quad([](double x) { return std::log(std::sin(x)); }, 0.0, 0.5 * pi, o);
       },
       [pi](double, const EvalOptions&) { return -0.5 * pi * std::numbers::ln2; }, 1e-10, C::absolute, {}, true});
  add({"EQ-5.11", "Fourier series for zeta'(-1, t)", "the Fourier series for zeta'(-1, t)", D::grid,
       [](double t, const EvalOptions& o) { return zeta_prime_minus1_fourier(t, o).value; },
       [](double t, const EvalOptions&) { return hurwitz_zeta_sderiv(1, -1.0, t); }, 1e-8});

  // -- Alternating Hurwitz zeta
  add({"EQ-6.2", "odd-harmonic Fourier series of zeta_a(1/2, t)", "Boudjelkha's formula", D::grid,
       [](double t, const EvalOptions& o) { return alt_hurwitz_zeta_fourier(0.5, t, o).value; },
       [](double t, const EvalOptions&) { return alt_hurwitz_zeta(0.5, t); }, 1e-6, C::tail_corrected});
  add({"EQ-6.8", "Euler-transformed series at s = 2, t = 1 gives pi^2/12", "the Hasse/Sondow identity", D::constant,
       [](double, const EvalOptions& o) { return alt_hurwitz_zeta_sondow(2.0, 1.0, o).value; },
       [pi](double, const EvalOptions&) { return pi * pi / 12.0; }, 1e-10});
  add({"EQ-6.10", "Euler-transformed series for zeta_a(1/2, t)", "Euler series transformation of zeta_a", D::grid,
       [](double t, const EvalOptions& o) { return alt_hurwitz_zeta_sondow(0.5, t, o).value; },
       [](double t, const EvalOptions&) { return alt_hurwitz_zeta(0.5, t); }, 1e-10});
  add({"EQ-6.11", "zeta_a(1/2, t) by Hurwitz difference vs Euler-transformed direct sum",
       "relation of zeta_a to the Hurwitz zeta", D::grid,
       [](double t, const EvalOptions&) { return alt_hurwitz_zeta(0.5, t); },
       [](double t, const EvalOptions& o) {
         return euler_transform_alternating([t](std::int64_t n) { return 1.0 / std::sqrt(n - 1.0 + t); }, o).value;
       },
       1e-8});
  add({"EQ-6.14", "zeta_a(1/2, t) = zeta(1/2, t) - 2^{1/2} zeta(1/2, (1+t)/2)", "shifted form of zeta_a", D::grid,
       [](double t, const EvalOptions&) { return alt_hurwitz_zeta_shifted_form(0.5, t); },
       [](double t, const EvalOptions&) { return alt_hurwitz_zeta(0.5, t); }, 1e-10});
  add({"EQ-6.15", "zeta_a(1/2, t) = 2^{1/2} zeta(1/2, t/2) - zeta(1/2, t)", "halved form of zeta_a", D::grid,
       [](double t, const EvalOptions&) { return alt_hurwitz_zeta_halved_form(0.5, t); },
       [](double t, const EvalOptions&) { return alt_hurwitz_zeta(0.5, t); }, 1e-10});
  add({"EQ-6.12", "zeta(1/2, x) = 2^{1/2} zeta(1/2, 2x) - zeta(1/2, x + 1/2)", "Hansen and Patrick", D::grid,
       [](double t, const EvalOptions&) { return hansen_patrick(0.5, t).first; },
       [](double t, const EvalOptions&) { return hansen_patrick(0.5, t).second; }, 1e-10});
  add({"EQ-6.16", "(s - 1) zeta_a(s, t) at s = 1 + 1e-6 vanishes", "limit as s -> 1", D::points,
       [](double t, const EvalOptions&) { return 1e-6 * alt_hurwitz_zeta(1.0 + 1e-6, t); },
       [](double, const EvalOptions&) { return 0.0; }, 1e-5, C::conditional, {0.25, 0.5, 0.75, 1.0}});
  add({"EQ-6.17", "Hardy's functional equation for zeta_a(-s)", "Hardy's functional equation", D::points,
       [](double s, const EvalOptions&) { return alt_zeta_hardy(s); },
       [](double s, const EvalOptions&) { return alt_hurwitz_zeta(-s, 1.0); }, 1e-8, C::absolute,
       {0.0, 0.5, 1.0, 2.0, 2.5}});
  add({"EQ-6.18", "E_5(t) finite sum vs Bernoulli-polynomial form", "Euler polynomials as finite sums", D::grid,
       [](double t, const EvalOptions&) { return euler_poly(5, t); },
       [](double t, const EvalOptions&) {
         return (2.0 / 6.0) * (bernoulli_poly(6, t) - 64.0 * bernoulli_poly(6, 0.5 * t));
       },
       1e-12});
  add({"EQ-6.19", "odd-harmonic Fourier series of E_3(t)", "Fourier series of the Euler polynomials", D::grid,
       [](double t, const EvalOptions& o) { return euler_fourier(3, t, o).value; },
       [](double t, const EvalOptions&) { return euler_poly(3, t); }, 1e-8});

  // -- Hansen sums, Clausen functions, rational arguments
  add({"EQ-7.1a", "sum sin(n x + y)/n^s as a Hurwitz combination, s = 2.5, x = 1.2, y = 0.7",
       "Hansen's offset sine sum", D::constant,
       [](double, const EvalOptions& o) { return hansen_offset_sums(2.5, 1.2, 0.7, o).sin_sum.value; },
       [](double, const EvalOptions& o) { return *hansen_offset_sums(2.5, 1.2, 0.7, o).sin_closed; }, 1e-8});
  add({"EQ-7.1b", "sum cos(n x + y)/n^s as a Hurwitz combination, s = 2.5, x = 1.2, y = 0.7",
       "Hansen's offset cosine sum", D::constant,
       [](double, const EvalOptions& o) { return hansen_offset_sums(2.5, 1.2, 0.7, o).cos_sum.value; },
       [](double, const EvalOptions& o) { return *hansen_offset_sums(2.5, 1.2, 0.7, o).cos_closed; }, 1e-8});
  add({"EQ-7.8", "sum sin(n pi x)/n = (pi/2)(1 - x)", "sawtooth Fourier series", D::interior,
       [pi](double x, const EvalOptions& o) { return hansen_offset_sums(1.0, pi * x, 0.0, o).sin_sum.value; },
       [pi](double x, const EvalOptions&) { return 0.5 * pi * (1.0 - x); }, 1e-4, C::conditional});
  add({"EQ-7.9", "Fourier series of B_3(t)", "Fourier series of the odd Bernoulli polynomials", D::grid,
       [](double t, const EvalOptions& o) { return bernoulli_fourier(3, t, o).value; },
       [](double t, const EvalOptions&) { return bernoulli_poly(3, t); }, 1e-8});
  add({"EQ-7.10a", "sum sin(n pi x)/n^2 = -2 pi [zeta'(-1, 1-x/2) - zeta'(-1, x/2)]",
       "Clausen sine sums through zeta derivatives", D::grid,
       [pi](double x, const EvalOptions& o) { return clausen(2, pi * x, o).value; },
       [pi](double x, const EvalOptions&) {
         return -2.0 * pi * (hurwitz_zeta_sderiv(1, -1.0, 1.0 - 0.5 * x) - hurwitz_zeta_sderiv(1, -1.0, 0.5 * x));
       },
       1e-8});
  add({"EQ-7.10b", "sum cos(n pi x)/n^3 = -2 pi^2 [zeta'(-2, 1-x/2) + zeta'(-2, x/2)]",
       "Clausen cosine sums through zeta derivatives", D::grid,
       [pi](double x, const EvalOptions& o) { return clausen(3, pi * x, o).value; },
       [pi](double x, const EvalOptions&) {
         return -2.0 * pi * pi * (hurwitz_zeta_sderiv(1, -2.0, 1.0 - 0.5 * x) + hurwitz_zeta_sderiv(1, -2.0, 0.5 * x));
       },
       1e-8});
  add({"EQ-7.11a", "Cl_4(2 pi x) from zeta'(-3, x) - zeta'(-3, 1-x)", "Adamchik's results for even order", D::grid,
       [pi](double x, const EvalOptions& o) { return clausen(4, 2.0 * pi * x, o).value; },
       [](double x, const EvalOptions&) { return clausen_via_zeta(4, x); }, 1e-8});
  add({"EQ-7.11b", "Cl_5(2 pi x) from zeta'(-4, x) + zeta'(-4, 1-x)", "Adamchik's results for odd order", D::grid,
       [pi](double x, const EvalOptions& o) { return clausen(5, 2.0 * pi * x, o).value; },
       [](double x, const EvalOptions&) { return clausen_via_zeta(5, x); }, 1e-8});
  add({"EQ-7.12", "zeta(-3, t) = -B_4(t)/4 with B_4 from the Hasse sum", "Bernoulli polynomials via the Hasse sum",
       D::grid, [](double t, const EvalOptions&) { return hurwitz_zeta(-3.0, t); },
       [](double t, const EvalOptions&) { return -bernoulli_poly_hasse(4, t) / 4.0; }, 1e-10});
  add({"EQ-PQ", "sum sin(2 n pi p/q)/n^s = q^{-s} sum_j sin(2 pi j p/q) zeta(s, j/q), (p, q, s) = (2, 5, 2.5)",
       "rational-argument sine sums", D::constant,
       [](double, const EvalOptions& o) { return rational_sine_zeta_sum(2, 5, 2.5, o).first; },
       [](double, const EvalOptions& o) { return rational_sine_zeta_sum(2, 5, 2.5, o).second; }, 1e-9});

  // -- Ci/si expansions
  add({"EQ-8.1", "psi(x) from the Ci/si series", "Noerlund's expansion of psi", D::grid,
       [](double x, const EvalOptions& o) { return norlund_digamma_series(x, o).value; },
       [](double x, const EvalOptions&) { return digamma(x); }, 1e-7, C::tail_corrected});
  add({"EQ-8.2", "log Gamma(x) from the Ci/si series", "Ci/si expansion of log Gamma", D::grid,
       [](double x, const EvalOptions& o) { return loggamma_ci_series(x, o).value; },
       [](double x, const EvalOptions&) { return log_gamma(x); }, 1e-6, C::tail_corrected});
  add({"EQ-8.3", "x log Gamma(x) - log G(1+x) from the Ci/Si series", "Ci/Si expansion of the Barnes function",
       D::grid, [](double x, const EvalOptions& o) { return barnes_ci_combination(x, o).value; },
       [](double x, const EvalOptions&) { return x * log_gamma(x) - log_barnes_g_zeta(x); }, 1e-6,
       C::tail_corrected});
  add({"EQ-8.4", "zeta'(-1, x) from the Ci/si series", "Elizalde's expansion", D::grid,
       [](double x, const EvalOptions& o) { return elizalde_series(x, o).value; },
       [](double x, const EvalOptions&) { return hurwitz_zeta_sderiv(1, -1.0, x); }, 1e-7, C::tail_corrected});
  add({"EQ-8.5", "H_N - log N at N = max_terms approaches gamma", "the limit defining gamma", D::constant,
       [](double, const EvalOptions& o) {
         CompensatedSum h;
         for (std::int64_t n = o.max_terms; n >= 1; --n) h.add(1.0 / static_cast<double>(n));
         return h.value() - std::log(static_cast<double>(o.max_terms));
       },
       [](double, const EvalOptions&) { return constants().euler_gamma; }, 1e-4, C::conditional});
  add({"EQ-8.6", "sum (-1)^{k+1} [1/k - log(1 + 1/k)] = log(4/pi)", "Sondow's alternating series", D::constant,
       [](double, const EvalOptions& o) {
         return euler_transform_alternating(
                    [](std::int64_t j) {
                      const double x = static_cast<double>(j);
                      return 1.0 / x - std::log1p(1.0 / x);
                    },
                    o)
             .value;
       },
       [pi](double, const EvalOptions&) { return std::log(4.0 / pi); }, 1e-10});
  add({"EQ-8.7", "psi(x) from Lerch's trigonometric expansion", "Lerch's trigonometric series expansion",
       D::interior, [](double x, const EvalOptions& o) { return digamma_lerch_series(x, o).value; },
       [](double x, const EvalOptions&) { return digamma(x); }, 1e-3, C::conditional});
  return r;
}

}  // namespace detail

/// All registered checks; built once, immutable afterwards.
inline const std::vector<IdentityCheck>& registry() {
  static const std::vector<IdentityCheck> r = detail::build_registry();
  return r;
}

inline const IdentityCheck& find_check(const std::string& id) {
  for (const auto& c : registry())
    if (c.id == id) return c;
  std::string valid;
  for (const auto& c : registry()) valid += (valid.empty() ? "" : ", ") + c.id;
  throw selection_error("unknown identity id '" + id + "'; valid ids: " + valid);
}

inline std::vector<std::string> all_identity_ids() {
  std::vector<std::string> ids;
  for (const auto& c : registry()) ids.push_back(c.id);
  return ids;
}

/// Evaluates every selected check at each of its points. Checks run
/// concurrently; reports come back in registry order, then point order.
inline std::vector<IdentityReport> run_suite(const std::vector<std::string>& selection, const GridSpec& grid = {},
                                             const EvalOptions& opts = {}, unsigned threads = 0) {
  opts.validate();
  grid.validate();
  std::vector<const IdentityCheck*> chosen;
  for (const auto& id : selection) chosen.push_back(&find_check(id));
  std::sort(chosen.begin(), chosen.end());
  chosen.erase(std::unique(chosen.begin(), chosen.end()), chosen.end());

  struct Task {
    const IdentityCheck* check;
    std::optional<double> point;
  };
  std::vector<Task> tasks;
  for (const auto& c : registry()) {
    if (std::find(chosen.begin(), chosen.end(), &c) == chosen.end()) continue;
    switch (c.domain) {
      case IdentityCheck::Domain::constant:
        tasks.push_back({&c, std::nullopt});
        break;
      case IdentityCheck::Domain::points:
        for (double p : c.points) tasks.push_back({&c, p});
        break;
      case IdentityCheck::Domain::grid:
      case IdentityCheck::Domain::interior:
        for (double p : grid.points) {
          if (c.domain == IdentityCheck::Domain::interior && (p < 0.05 || p > 0.95)) continue;
          tasks.push_back({&c, p});
        }
        break;
    }
  }

  (void)constants();
  std::vector<IdentityReport> out(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < tasks.size(); i = next++) {
      const auto& [c, point] = tasks[i];
      IdentityReport rep{c->id, point, 0.0, 0.0, 0.0, c->tolerance, false, c->paper_ref};
      const double x = point.value_or(0.0);
      try {
        rep.lhs = c->lhs(x, opts);
        rep.rhs = c->rhs(x, opts);
        rep.abs_residual = std::fabs(rep.lhs - rep.rhs);
      } catch (const std::exception&) {
        rep.lhs = rep.rhs = rep.abs_residual = std::numeric_limits<double>::quiet_NaN();
      }
      rep.pass = rep.abs_residual <= rep.tolerance;
      out[i] = std::move(rep);
    }
  };
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(1, tasks.size())));
  std::vector<std::thread> pool;
  for (unsigned i = 1; i < threads; ++i) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
  return out;
}

/// run_suite over every registered check.
inline std::vector<IdentityReport> run_all(const GridSpec& grid = {}, const EvalOptions& opts = {}) {
  return run_suite(all_identity_ids(), grid, opts);
}

}  // namespace kummer
