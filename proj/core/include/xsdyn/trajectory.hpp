#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "xsdyn/density.hpp"

namespace xsdyn {

// Samples of a time evolution; the three vectors always have equal length
// and `times` is strictly increasing.
struct Trajectory {
  std::vector<double> times;
  std::vector<DensityMatrix4> states;
  std::vector<double> concurrences;

  std::size_t size() const { return times.size(); }
  void push_back(double t, const DensityMatrix4& rho, double c) {
    times.push_back(t);
    states.push_back(rho);
    concurrences.push_back(c);
  }
};

// Continuous-time state map t -> rho(t), used as an oracle for event
// refinement and cross-checks.
using StateAt = std::function<DensityMatrix4(double)>;

/// Sample times 0, dt, 2dt, ... with a final, possibly shorter, step ending
/// exactly at t_end. Throws ParameterOutOfRange unless dt > 0, t_end >= 0.
std::vector<double> sample_times(double t_end, double dt);

/// Trajectory of `state_at` evaluated on sample_times(t_end, dt).
Trajectory sample_trajectory(const StateAt& state_at, double t_end, double dt);

struct TrajectoryHealth {
  double max_trace_drift = 0.0;     // max |Tr rho - 1|
  double max_hermiticity = 0.0;     // max |rho - rho^dagger|_max
  double min_eigenvalue = 0.0;      // smallest eigenvalue over all samples
  double max_off_x = 0.0;           // largest off-X modulus (computational basis)
};

TrajectoryHealth inspect(const Trajectory& traj);

}  // namespace xsdyn
