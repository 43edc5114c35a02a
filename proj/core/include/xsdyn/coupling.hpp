#pragma once

namespace xsdyn {

// Prefactor of the collective dipole shift. The closed form for the shift is
// usually written with 3/4; the commonly quoted shift at r = lambda/6
// (1.12 Gamma) is what 3/2 produces. ThreeHalves is the default.
enum class OmegaPrefactor { ThreeQuarters, ThreeHalves };

const char* to_string(OmegaPrefactor p);

// Rates in units of inverse dimensionless time; time is measured in 1/gamma
// when gamma = 1.
struct CouplingParams {
  double gamma = 1.0;     // single-atom spontaneous emission rate
  double gamma12 = 0.0;   // collective damping
  double omega12 = 0.0;   // collective dipole-dipole shift
  double separation = 0.0;  // r12 / lambda
  double mu_dot_r = 0.0;  // cosine between dipole moment and separation axis
  OmegaPrefactor omega_prefactor = OmegaPrefactor::ThreeHalves;
};

/// Collective damping and dipole shift of two identical dipoles a distance
/// `separation` (in wavelengths) apart, with kr = 2 pi separation.
/// Throws ParameterOutOfRange for separation <= 0 or |mu_dot_r| > 1.
CouplingParams coupling_params(double separation, double mu_dot_r = 0.0, double gamma = 1.0,
                               OmegaPrefactor prefactor = OmegaPrefactor::ThreeHalves);

/// The rounded rates used for the r = lambda/6 figures: gamma12 = 0.79,
/// omega12 = 1.12 (gamma = 1).
CouplingParams quoted_lambda_over_six();

/// Throws ParameterOutOfRange unless gamma > 0 and |gamma12| <= gamma.
void check_coupling(const CouplingParams& p);

}  // namespace xsdyn
