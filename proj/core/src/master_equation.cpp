#include "xsdyn/master_equation.hpp"

#include <cmath>

#include "xsdyn/concurrence.hpp"

namespace xsdyn {

namespace {

const Mat2 kLower{0.0, 1.0, 0.0, 0.0};  // |g><e| in (g, e) ordering

}  // namespace

VacuumGenerator::VacuumGenerator(const CouplingParams& params) : params_(params) {
  check_coupling(params_);
  const Mat2 id = Mat2::identity();
  lowering_ = {kron(kLower, id), kron(id, kLower)};
  raising_ = {lowering_[0].adjoint(), lowering_[1].adjoint()};
  exchange_ = raising_[0] * lowering_[1] + raising_[1] * lowering_[0];
  decay_sum_ = params_.gamma * (raising_[0] * lowering_[0] + raising_[1] * lowering_[1]) +
               params_.gamma12 * (raising_[0] * lowering_[1] + raising_[1] * lowering_[0]);
}

Mat4 VacuumGenerator::operator()(const Mat4& rho) const {
  Mat4 out = (-kI * params_.omega12) * (exchange_ * rho - rho * exchange_);
  out -= 0.5 * (rho * decay_sum_ + decay_sum_ * rho);
  out += params_.gamma * (lowering_[0] * rho * raising_[0] + lowering_[1] * rho * raising_[1]);
  out += params_.gamma12 * (lowering_[1] * rho * raising_[0] + lowering_[0] * rho * raising_[1]);
  return out;
}

Mat4 liouvillian_rhs(const DensityMatrix4& rho, const CouplingParams& params) {
  if (rho.basis() != Basis::Computational)
    throw WrongBasisTag("liouvillian_rhs expects a computational-basis state");
  return VacuumGenerator(params)(rho.matrix());
}

Trajectory evolve_rk4(const DensityMatrix4& rho0, const CouplingParams& params, double t_end,
                      double dt, const Rk4Options& options) {
  if (rho0.basis() != Basis::Computational)
    throw WrongBasisTag("evolve_rk4 expects a computational-basis state");
  const VacuumGenerator rhs(params);
  const std::vector<double> times = sample_times(t_end, dt);

  Trajectory traj;
  traj.times.reserve(times.size());
  traj.states.reserve(times.size());
  traj.concurrences.reserve(times.size());
  traj.push_back(times[0], rho0, concurrence(rho0));

  Mat4 rho = rho0.matrix();
  for (std::size_t k = 1; k < times.size(); ++k) {
    const double h = times[k] - times[k - 1];
    const Mat4 k1 = rhs(rho);
    const Mat4 k2 = rhs(rho + (0.5 * h) * k1);
    const Mat4 k3 = rhs(rho + (0.5 * h) * k2);
    const Mat4 k4 = rhs(rho + h * k3);
    Mat4 next = rho + (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);

    next = hermitian_part(next);
    const double trace = next.trace().real();
    const double drift = std::abs(trace - 1.0);
    if (!(drift <= options.max_trace_drift_per_step)) throw StepRejected(times[k], drift);
    next *= cplx(1.0 / trace);

    const DensityMatrix4 state = validate_density(next);
    traj.push_back(times[k], state, concurrence(state));
    rho = next;
  }
  return traj;
}

}  // namespace xsdyn
