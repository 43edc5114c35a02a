#include "xsdyn/propagator.hpp"

#include <cmath>

#include "xsdyn/states.hpp"

namespace xsdyn {

namespace {

constexpr double kDegenerateRate = 1e-12;
constexpr double kXTolerance = 1e-10;

// (e^{rate t} - 1) / rate, with the rate -> 0 limit t.
double growth_over_rate(double rate, double t) {
  if (std::abs(rate) < kDegenerateRate) return t;
  return std::expm1(rate * t) / rate;
}

// Collective-basis X form: populations plus the g-e and s-a coherences.
void require_collective_x(const Mat4& c) {
  double worst = 0.0;
  for (std::size_t r = 0; r < 4; ++r)
    for (std::size_t col = 0; col < 4; ++col) {
      const bool allowed = r == col || r + col == 3;
      if (!allowed) worst = std::max(worst, std::abs(c(r, col)));
    }
  if (worst > kXTolerance) throw NotXState(worst);
}

}  // namespace

DensityMatrix4 analytic_xstate_propagate(const DensityMatrix4& rho0, const CouplingParams& params,
                                         double t) {
  check_coupling(params);
  if (!(t >= 0.0)) throw ParameterOutOfRange("analytic propagation needs t >= 0");
  if (t == 0.0) return rho0;

  const DensityMatrix4 coll = rho0.basis() == Basis::Collective ? rho0 : to_collective(rho0);
  const Mat4& c0 = coll.matrix();
  require_collective_x(c0);

  const double g = params.gamma;
  const double g12 = params.gamma12;
  const double ee0 = c0(3, 3).real();
  const double ss0 = c0(1, 1).real();
  const double aa0 = c0(2, 2).real();
  const double decay2 = std::exp(-2.0 * g * t);

  const double ee = ee0 * decay2;
  const double ss = ss0 * std::exp(-(g + g12) * t) + ee0 * (g + g12) * growth_over_rate(g - g12, t) * decay2;
  const double aa = aa0 * std::exp(-(g - g12) * t) + ee0 * (g - g12) * growth_over_rate(g + g12, t) * decay2;

  Mat4 m;
  m(3, 3) = ee;
  m(1, 1) = ss;
  m(2, 2) = aa;
  m(0, 0) = 1.0 - ee - ss - aa;
  m(0, 3) = c0(0, 3) * std::exp(-g * t);
  m(3, 0) = std::conj(m(0, 3));
  m(1, 2) = c0(1, 2) * std::exp(cplx(-g * t, -2.0 * params.omega12 * t));
  m(2, 1) = std::conj(m(1, 2));

  const DensityMatrix4 evolved = validate_density(m, Basis::Collective);
  return rho0.basis() == Basis::Collective ? evolved : from_collective(evolved);
}

StateAt analytic_state_map(const DensityMatrix4& rho0, const CouplingParams& params) {
  check_coupling(params);
  const DensityMatrix4 coll = rho0.basis() == Basis::Collective ? rho0 : to_collective(rho0);
  require_collective_x(coll.matrix());
  return [rho0, params](double t) { return analytic_xstate_propagate(rho0, params, t); };
}

}  // namespace xsdyn
