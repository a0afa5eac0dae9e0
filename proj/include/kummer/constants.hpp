#pragma once

// Constants computed once from the library's own evaluators.

#include <cmath>
#include <numbers>
#include <string>

#include "gamma.hpp"
#include "zeta.hpp"

namespace kummer {

struct Constants {
  double euler_gamma;
  double log_two_pi;
  double zeta_prime_minus1;
  double log_glaisher;
  double zeta_prime_2;
  double zeta_second_2;

  struct Provenance {
    std::string euler_gamma;
    std::string log_two_pi;
    std::string zeta_prime_minus1;
    std::string log_glaisher;
    std::string zeta_prime_2;
    std::string zeta_second_2;
  } provenance;
};

inline Constants compute_constants() {
  Constants c{};
  c.euler_gamma = -digamma(1.0);
  c.log_two_pi = std::log(2.0 * std::numbers::pi);
  c.zeta_prime_minus1 = hurwitz_zeta_sderiv(1, -1.0, 1.0);
  c.log_glaisher = 1.0 / 12.0 - c.zeta_prime_minus1;
  c.zeta_prime_2 = hurwitz_zeta_sderiv(1, 2.0, 1.0);
  c.zeta_second_2 = hurwitz_zeta_sderiv(2, 2.0, 1.0);
  c.provenance = {
      "-digamma(1), asymptotic series with upward recurrence",
      "log(2 pi)",
      "d/ds zeta(s,1) at s=-1, differentiated Euler-Maclaurin",
      "1/12 - zeta'(-1)",
      "d/ds zeta(s,1) at s=2, differentiated Euler-Maclaurin",
      "d2/ds2 zeta(s,1) at s=2, differentiated Euler-Maclaurin",
  };
  return c;
}

/// Cached constants; built on first use, immutable afterwards.
inline const Constants& constants() {
  static const Constants c = compute_constants();
  return c;
}

}  // namespace kummer
