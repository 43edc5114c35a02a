#pragma once

#include <string>
#include <vector>

#include "xsdyn/density.hpp"
#include "xsdyn/matrix.hpp"
#include "xsdyn/trajectory.hpp"

namespace xsdyn {

template <std::size_t N>
struct KrausSet {
  std::vector<Matrix<N>> operators;
  std::string label;
};

using KrausSet2 = KrausSet<2>;
using KrausSet4 = KrausSet<4>;

enum class ChannelKind { PhaseDamping, AmplitudeDamping, RandomTelegraph };

const char* to_string(ChannelKind kind);

struct ChannelParams {
  ChannelKind kind = ChannelKind::PhaseDamping;
  double rate = 1.0;        // Gamma_PD, Gamma_AD or gamma_RTN
  double coupling_b = 0.0;  // RTN coupling strength b

  // RTN only: (2b)^2 <= gamma^2.
  bool markovian() const { return 4.0 * coupling_b * coupling_b <= rate * rate; }
};

/// Throws ParameterOutOfRange unless rate > 0 and b >= 0, both finite.
void check_channel(const ChannelParams& params);

/// E0 = diag(1, g), E1 = diag(0, w), g = exp(-rate t / 2), w = sqrt(1 - g^2).
KrausSet2 kraus_phase_damping(double rate, double t);

/// E0 = diag(1, g), E1 = w |g><e|: the excited level decays to ground.
KrausSet2 kraus_amplitude_damping(double rate, double t);

/// RTN memory kernel. With mu = sqrt(|(2b/gamma)^2 - 1|):
///   (2b)^2 > gamma^2:  e^{-gamma t} [cos(mu gamma t) + sin(mu gamma t) / mu]
///   (2b)^2 < gamma^2:  e^{-gamma t} [cosh(mu gamma t) + sinh(mu gamma t) / mu]
///   otherwise:         e^{-gamma t} (1 + gamma t)
/// The branch switches to the limit when |(2b/gamma)^2 - 1| < 1e-10.
double rtn_delta(double b, double gamma_rtn, double t);

/// E0 = sqrt((1 + D) / 2) I, E1 = sqrt((1 - D) / 2) Z with D = rtn_delta(b, gamma, t).
/// Throws DeltaOutOfRange if |D| > 1 + 1e-12.
KrausSet2 kraus_rtn(double b, double gamma_rtn, double t);

/// Every E_i (x) E_j, qubit 1 on the left.
KrausSet4 lift_two_qubit(const KrausSet2& k);

/// sum_i E_i rho E_i^dagger, re-validated in the computational basis.
DensityMatrix4 apply_channel(const DensityMatrix4& rho, const KrausSet4& k);

struct CptpReport {
  double deviation;  // |sum E^dagger E - I|_max
  bool pass;
};

template <std::size_t N>
CptpReport cptp_check(const KrausSet<N>& k, double tol = 1e-12);

/// Two-qubit Kraus set for `params` at time t.
KrausSet4 channel_kraus(const ChannelParams& params, double t);

/// t -> apply_channel(rho0, channel_kraus(params, t)).
StateAt channel_state_map(const DensityMatrix4& rho0, const ChannelParams& params);

/// Channel map sampled on sample_times(t_end, dt).
Trajectory evolve_channel(const DensityMatrix4& rho0, const ChannelParams& params, double t_end,
                          double dt);

}  // namespace xsdyn
