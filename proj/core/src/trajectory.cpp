#include "xsdyn/trajectory.hpp"

#include <algorithm>
#include <cmath>

#include "xsdyn/concurrence.hpp"
#include "xsdyn/eigen.hpp"

namespace xsdyn {

std::vector<double> sample_times(double t_end, double dt) {
  if (!(dt > 0.0) || !std::isfinite(dt))
    throw ParameterOutOfRange("time step must be positive and finite");
  if (!(t_end >= 0.0) || !std::isfinite(t_end))
    throw ParameterOutOfRange("end time must be non-negative and finite");

  // t_k = k * dt, never accumulated; a remainder below 1e-9 dt is dropped.
  const auto full = static_cast<std::size_t>(std::floor(t_end / dt + 1e-9));
  std::vector<double> times;
  times.reserve(full + 2);
  for (std::size_t k = 0; k <= full; ++k) times.push_back(std::min(static_cast<double>(k) * dt, t_end));
  if (t_end - times.back() > 1e-9 * dt) times.push_back(t_end);
  return times;
}

Trajectory sample_trajectory(const StateAt& state_at, double t_end, double dt) {
  Trajectory traj;
  for (double t : sample_times(t_end, dt)) {
    const DensityMatrix4 rho = state_at(t);
    traj.push_back(t, rho, concurrence(rho));
  }
  return traj;
}

TrajectoryHealth inspect(const Trajectory& traj) {
  TrajectoryHealth h;
  bool first = true;
  for (const auto& rho : traj.states) {
    const Mat4& m = rho.matrix();
    h.max_trace_drift = std::max(h.max_trace_drift, std::abs(m.trace() - 1.0));
    h.max_hermiticity = std::max(h.max_hermiticity, hermiticity_defect(m));
    const double lowest = hermitian_eigenvalues(hermitian_part(m))[3];
    h.min_eigenvalue = first ? lowest : std::min(h.min_eigenvalue, lowest);
    if (rho.basis() == Basis::Computational)
      h.max_off_x = std::max(h.max_off_x, off_x_magnitude(m));
    first = false;
  }
  return h;
}

}  // namespace xsdyn
