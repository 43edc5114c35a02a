#include "xsdyn/coupling.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "xsdyn/errors.hpp"

namespace xsdyn {

const char* to_string(OmegaPrefactor p) {
  return p == OmegaPrefactor::ThreeQuarters ? "three-quarters" : "three-halves";
}

CouplingParams coupling_params(double separation, double mu_dot_r, double gamma,
                               OmegaPrefactor prefactor) {
  if (!(separation > 0.0))
    throw ZeroSeparation("coupling_params: separation must be positive");
  if (!(std::abs(mu_dot_r) <= 1.0))
    throw ParameterOutOfRange("coupling_params: mu_dot_r must lie in [-1, 1]");
  if (!(gamma > 0.0)) throw ParameterOutOfRange("coupling_params: gamma must be positive");

  const double kr = 2.0 * std::numbers::pi * separation;
  const double c2 = mu_dot_r * mu_dot_r;
  const double transverse = 1.0 - c2;
  const double longitudinal = 1.0 - 3.0 * c2;
  const double s = std::sin(kr);
  const double c = std::cos(kr);
  const double kr2 = kr * kr;
  const double kr3 = kr2 * kr;

  CouplingParams p;
  p.gamma = gamma;
  p.separation = separation;
  p.mu_dot_r = mu_dot_r;
  p.omega_prefactor = prefactor;
  p.gamma12 = 1.5 * gamma * (transverse * s / kr + longitudinal * (c / kr2 - s / kr3));
  const double shift_bracket = -transverse * c / kr + longitudinal * (s / kr2 + c / kr3);
  const double shift_prefactor = prefactor == OmegaPrefactor::ThreeHalves ? 1.5 : 0.75;
  p.omega12 = shift_prefactor * gamma * shift_bracket;
  return p;
}

CouplingParams quoted_lambda_over_six() {
  CouplingParams p;
  p.gamma = 1.0;
  p.gamma12 = 0.79;
  p.omega12 = 1.12;
  p.separation = 1.0 / 6.0;
  p.mu_dot_r = 0.0;
  p.omega_prefactor = OmegaPrefactor::ThreeHalves;
  return p;
}

void check_coupling(const CouplingParams& p) {
  if (!(p.gamma > 0.0)) throw ParameterOutOfRange("coupling: gamma must be positive");
  if (!(std::abs(p.gamma12) <= p.gamma))
    throw ParameterOutOfRange("coupling: |gamma12| must not exceed gamma, got " +
                              std::to_string(p.gamma12));
  if (!std::isfinite(p.omega12)) throw ParameterOutOfRange("coupling: omega12 must be finite");
}

}  // namespace xsdyn
