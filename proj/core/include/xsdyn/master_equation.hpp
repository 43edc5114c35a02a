#pragma once

#include "xsdyn/coupling.hpp"
#include "xsdyn/density.hpp"
#include "xsdyn/trajectory.hpp"

namespace xsdyn {

// Generator of two identical two-level atoms sharing a vacuum bath, in the
// frame rotating at the common transition frequency:
//
//   drho/dt = -i Omega12 [S1+ S2- + S2+ S1-, rho]
//             - 1/2 sum_ij Gamma_ij (rho Si+ Sj- + Si+ Sj- rho - 2 Sj- rho Si+)
//
// with Gamma_11 = Gamma_22 = gamma and Gamma_12 = Gamma_21 = gamma12.
class VacuumGenerator {
 public:
  explicit VacuumGenerator(const CouplingParams& params);

  /// drho/dt for a computational-basis matrix. Linear, so it accepts the
  /// unvalidated intermediate stages of an integrator.
  Mat4 operator()(const Mat4& rho) const;

  const CouplingParams& params() const { return params_; }

 private:
  CouplingParams params_;
  Mat4 exchange_;        // S1+ S2- + S2+ S1-
  Mat4 decay_sum_;       // sum_ij Gamma_ij Si+ Sj-
  std::array<Mat4, 2> lowering_;
  std::array<Mat4, 2> raising_;
};

/// drho/dt at `rho`; the result is traceless and Hermitian up to rounding.
Mat4 liouvillian_rhs(const DensityMatrix4& rho, const CouplingParams& params);

struct Rk4Options {
  // A step whose trace changes by more than this is rejected (dt too large).
  double max_trace_drift_per_step = 1e-6;
};

/// Fixed-step classical RK4 from rho0 to t_end. After every step the state
/// is replaced by its Hermitian part, renormalised to unit trace and
/// re-validated; concurrence is recorded at every sample.
/// Throws ParameterOutOfRange for dt <= 0 or t_end < 0, StepRejected on
/// excessive trace drift and DensityViolation if a step leaves the state
/// space.
Trajectory evolve_rk4(const DensityMatrix4& rho0, const CouplingParams& params, double t_end,
                      double dt, const Rk4Options& options = {});

}  // namespace xsdyn
