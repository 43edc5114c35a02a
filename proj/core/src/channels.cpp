#include "xsdyn/channels.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace xsdyn {

namespace {

constexpr double kCriticalBand = 1e-10;
constexpr double kDeltaSlack = 1e-12;

void check_rate_time(double rate, double t) {
  if (!(rate > 0.0) || !std::isfinite(rate)) throw ParameterOutOfRange("channel rate must be positive");
  if (!(t >= 0.0) || !std::isfinite(t)) throw ParameterOutOfRange("channel time must be non-negative");
}

std::string label_of(const char* name, double rate, double t) {
  char buf[96];
  std::snprintf(buf, sizeof buf, "%s(rate=%.6g,t=%.6g)", name, rate, t);
  return buf;
}

}  // namespace

const char* to_string(ChannelKind kind) {
  switch (kind) {
    case ChannelKind::PhaseDamping:
      return "pd";
    case ChannelKind::AmplitudeDamping:
      return "ad";
    case ChannelKind::RandomTelegraph:
      return "rtn";
  }
  return "?";
}

void check_channel(const ChannelParams& params) {
  if (!(params.rate > 0.0) || !std::isfinite(params.rate))
    throw ParameterOutOfRange("channel rate must be positive");
  if (!(params.coupling_b >= 0.0) || !std::isfinite(params.coupling_b))
    throw ParameterOutOfRange("RTN coupling b must be non-negative");
}

KrausSet2 kraus_phase_damping(double rate, double t) {
  check_rate_time(rate, t);
  const double g = std::exp(-0.5 * rate * t);
  const double w = std::sqrt(-std::expm1(-rate * t));
  return {{Mat2::diagonal({1.0, g}), Mat2::diagonal({0.0, w})}, label_of("pd", rate, t)};
}

KrausSet2 kraus_amplitude_damping(double rate, double t) {
  check_rate_time(rate, t);
  const double g = std::exp(-0.5 * rate * t);
  const double w = std::sqrt(-std::expm1(-rate * t));
  Mat2 e1;
  e1(0, 1) = w;
  return {{Mat2::diagonal({1.0, g}), e1}, label_of("ad", rate, t)};
}

double rtn_delta(double b, double gamma_rtn, double t) {
  if (!(gamma_rtn > 0.0) || !std::isfinite(gamma_rtn))
    throw ParameterOutOfRange("RTN gamma must be positive");
  if (!(b >= 0.0) || !std::isfinite(b)) throw ParameterOutOfRange("RTN coupling b must be non-negative");
  if (!(t >= 0.0) || !std::isfinite(t)) throw ParameterOutOfRange("channel time must be non-negative");

  if (t == 0.0) return 1.0;
  const double gt = gamma_rtn * t;
  const double ratio = 2.0 * b / gamma_rtn;
  const double s = ratio * ratio - 1.0;
  if (std::abs(s) < kCriticalBand) return std::exp(-gt) * (1.0 + gt);
  if (s > 0.0) {
    const double mu = std::sqrt(s);
    return std::exp(-gt) * (std::cos(mu * gt) + std::sin(mu * gt) / mu);
  }
  // cosh + sinh / mu in exponential form.
  const double mu = std::sqrt(-s);
  return 0.5 * ((1.0 + 1.0 / mu) * std::exp((mu - 1.0) * gt) + (1.0 - 1.0 / mu) * std::exp(-(1.0 + mu) * gt));
}

KrausSet2 kraus_rtn(double b, double gamma_rtn, double t) {
  const double delta = rtn_delta(b, gamma_rtn, t);
  if (!(std::abs(delta) <= 1.0 + kDeltaSlack)) throw DeltaOutOfRange(delta);
  const double p0 = std::sqrt(std::max(0.0, 0.5 * (1.0 + delta)));
  const double p1 = std::sqrt(std::max(0.0, 0.5 * (1.0 - delta)));
  Mat2 e0 = Mat2::identity();
  e0 *= p0;
  Mat2 e1 = pauli::z();
  e1 *= p1;
  char buf[96];
  std::snprintf(buf, sizeof buf, "rtn(b=%.6g,gamma=%.6g,t=%.6g)", b, gamma_rtn, t);
  return {{e0, e1}, buf};
}

KrausSet4 lift_two_qubit(const KrausSet2& k) {
  KrausSet4 out;
  out.label = k.label + "^2";
  out.operators.reserve(k.operators.size() * k.operators.size());
  for (const auto& a : k.operators)
    for (const auto& b : k.operators) out.operators.push_back(kron(a, b));
  return out;
}

DensityMatrix4 apply_channel(const DensityMatrix4& rho, const KrausSet4& k) {
  if (rho.basis() != Basis::Computational)
    throw WrongBasisTag("channels act on computational-basis states");
  // out_ij = sum_ab (E_ia conj(E_jb)) rho_ab
  const Mat4& r = rho.matrix();
  Mat4 out;
  for (const auto& e : k.operators)
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j)
        for (std::size_t a = 0; a < 4; ++a)
          for (std::size_t b = 0; b < 4; ++b) out(i, j) += (e(i, a) * std::conj(e(j, b))) * r(a, b);
  return validate_density(out, Basis::Computational);
}

template <std::size_t N>
CptpReport cptp_check(const KrausSet<N>& k, double tol) {
  Matrix<N> sum;
  for (const auto& e : k.operators) sum += e.adjoint() * e;
  const double deviation = max_abs_diff(sum, Matrix<N>::identity());
  return {deviation, deviation <= tol};
}

template CptpReport cptp_check<2>(const KrausSet<2>&, double);
template CptpReport cptp_check<4>(const KrausSet<4>&, double);

KrausSet4 channel_kraus(const ChannelParams& params, double t) {
  check_channel(params);
  switch (params.kind) {
    case ChannelKind::PhaseDamping:
      return lift_two_qubit(kraus_phase_damping(params.rate, t));
    case ChannelKind::AmplitudeDamping:
      return lift_two_qubit(kraus_amplitude_damping(params.rate, t));
    case ChannelKind::RandomTelegraph:
      return lift_two_qubit(kraus_rtn(params.coupling_b, params.rate, t));
  }
  throw ParameterOutOfRange("unknown channel kind");
}

StateAt channel_state_map(const DensityMatrix4& rho0, const ChannelParams& params) {
  check_channel(params);
  if (rho0.basis() != Basis::Computational)
    throw WrongBasisTag("channels act on computational-basis states");
  return [rho0, params](double t) { return apply_channel(rho0, channel_kraus(params, t)); };
}

Trajectory evolve_channel(const DensityMatrix4& rho0, const ChannelParams& params, double t_end,
                          double dt) {
  return sample_trajectory(channel_state_map(rho0, params), t_end, dt);
}

}  // namespace xsdyn
