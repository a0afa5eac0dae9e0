#include <cmath>
#include <numbers>
#include <random>

#include <gtest/gtest.h>

#include <kummer/bernoulli.hpp>
#include <kummer/quadrature.hpp>

#include "oracles.hpp"
#include "reference_values.hpp"

using namespace kummer;
using std::numbers::pi;

TEST(Integrate, SpecExamples) {
  EvalOptions o;
  const auto a = integrate([](double t) { return std::log(sin_pi(t)); }, 0.0, 1.0, o);
  EXPECT_TRUE(a.converged);
  EXPECT_NEAR(a.value, -std::log(2.0), 1e-10);
  const auto b = integrate([](double t) { return (0.5 - t) * (0.5 - t); }, 0.0, 1.0, o);
  EXPECT_NEAR(b.value, 1.0 / 12.0, 1e-14);
  const auto c = integrate([](double x) { return std::log(std::sin(x)); }, 0.0, pi / 2, o);
  EXPECT_NEAR(c.value, -0.5 * pi * std::log(2.0), 1e-10);
}

TEST(IntegrateSplit, SpecExamples) {
  EvalOptions o;
  const auto a = integrate_split(
      [](double t) {
        const double l = std::log(2.0 * sin_pi(t));
        return l * l;
      },
      0.0, 1.0, {0.5}, o);
  EXPECT_NEAR(a.value, pi * pi / 12, 1e-9);
  const auto b = integrate_split(
      [](double t) {
        const double l = std::log(sin_pi(t));
        return l * l;
      },
      0.0, 1.0, {0.5}, o);
  const double ln2 = std::log(2.0);
  EXPECT_NEAR(b.value, pi * pi / 12 + ln2 * ln2, 1e-9);
  // int_0^1 log x log sin(pi x) dx against Gauss-Legendre on the smooth remainder
  // after removing log x log(pi x (1 - x)), whose integral is known.
  const auto c = integrate_split([](double x) { return std::log(x) * std::log(sin_pi(x)); }, 0.0, 1.0, {0.5}, o);
  const double smooth = oracle::gauss_legendre(
      [](double x) { return std::log(x) * std::log(sin_pi(x) / (pi * x * (1 - x))); }, 0.0, 1.0, 256);
  // int_0^1 log x log(pi x) = 2 - log pi ; int_0^1 log x log(1-x) = 2 - pi^2/6
  const double exact_sing = (2.0 - std::log(pi)) + (2.0 - pi * pi / 6);
  EXPECT_NEAR(c.value, smooth + exact_sing, 1e-8);
  const double claimed = pi * ref::log_glaisher - pi / 4 + std::log(2.0);
  EXPECT_GT(std::fabs(c.value - claimed), 0.1);
}

TEST(IntegrateSplit, RejectsOutsidePoints) {
  EXPECT_THROW(integrate_split([](double) { return 1.0; }, 0.0, 1.0, {1.5}), domain_error);
}

TEST(Integrate, ReversedAndEmptyIntervals) {
  EvalOptions o;
  EXPECT_EQ(integrate([](double x) { return x; }, 0.3, 0.3, o).value, 0.0);
  EXPECT_NEAR(integrate([](double x) { return x; }, 1.0, 0.0, o).value, -0.5, 1e-15);
}

TEST(Integrate, PolynomialExactness) {
  std::mt19937_64 rng(0xC0FFEE);
  std::uniform_real_distribution<double> coef(-1.0, 1.0);
  EvalOptions o;
  o.abs_tol = 1e-15;
  o.rel_tol = 1e-15;
  o.quad_max_level = 6;
  for (int deg = 0; deg <= 10; ++deg) {
    std::vector<double> c(deg + 1);
    for (auto& x : c) x = coef(rng);
    double exact = 0;
    for (int k = 0; k <= deg; ++k) exact += c[k] / (k + 1);
    const auto r = integrate(
        [&](double x) {
          double acc = 0;
          for (int k = deg; k >= 0; --k) acc = acc * x + c[k];
          return acc;
        },
        0.0, 1.0, o);
    EXPECT_LE(r.levels_used, 6);
    EXPECT_NEAR(r.value, exact, 1e-13) << deg;
  }
}

TEST(Integrate, ConvergedImpliesWithinTolerance) {
  EvalOptions o;
  for (double p : {0.5, 1.5, 3.0}) {
    const auto r = integrate([p](double x) { return std::pow(x, p) * std::log(x); }, 0.0, 1.0, o);
    EXPECT_NEAR(r.value, -1.0 / ((p + 1) * (p + 1)), 1e-10);
    if (r.converged) { EXPECT_LE(r.err_estimate, o.tolerance_for(r.value)); }
  }
  o.quad_max_level = 2;
  const auto r = integrate([](double x) { return std::sin(40 * x); }, 0.0, 10.0, o);
  EXPECT_FALSE(r.converged);
  EXPECT_EQ(r.levels_used, 2);
}

TEST(Integrate, BernoulliLogSineMoments) {
  EvalOptions o;
  for (int n : {0, 1}) {
    const int m = 2 * n + 1;
    const auto r =
        integrate_split([m](double t) { return bernoulli_poly(m, t) * std::log(sin_pi(t)); }, 0.0, 1.0, {0.5}, o);
    EXPECT_NEAR(r.value, 0.0, 1e-10) << m;
  }
  const auto r2 =
      integrate_split([](double t) { return bernoulli_poly(2, t) * std::log(sin_pi(t)); }, 0.0, 1.0, {0.5}, o);
  EXPECT_NEAR(r2.value, -ref::zeta3 / (2 * pi * pi), 1e-9);
}

TEST(Integrate, SquaredBernoulli) {
  EvalOptions o;
  for (int n = 1; n <= 3; ++n) {
    const auto r = integrate([n](double t) { return std::pow(bernoulli_poly(n, t), 2); }, 0.0, 1.0, o);
    const double f = boost::math::factorial<double>(n);
    const double exact = ((n % 2 == 1) ? 1.0 : -1.0) * f * f * static_cast<double>(oracle::bernoulli_number(2 * n)) /
                         boost::math::factorial<double>(2 * n);
    EXPECT_NEAR(r.value, exact, 1e-12) << n;
  }
}
