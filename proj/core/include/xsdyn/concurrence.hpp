#pragma once

#include "xsdyn/density.hpp"
#include "xsdyn/eigen.hpp"

namespace xsdyn {

/// (sigma_y x sigma_y) rho* (sigma_y x sigma_y). Throws WrongBasisTag for a
/// collective-basis state.
Mat4 spin_flip(const DensityMatrix4& rho);

/// Wootters concurrence from the spectrum of rho * spin_flip(rho).
///
/// Eigenvalues in [-1e-9, 0) are treated as zero; anything more negative
/// throws NegativeEigenvalue because it cannot come from a valid state.
double concurrence_wootters(const DensityMatrix4& rho);

// The two competing terms of the X-state concurrence before clamping:
//   c1 = 2(|rho_14| - sqrt(rho_22 rho_33))
//   c2 = 2(|rho_23| - sqrt(rho_11 rho_44))
struct XConcurrenceTerms {
  double c1;
  double c2;
  double value() const;  // max{0, c1, c2}
};

XConcurrenceTerms xstate_terms(const XStateView& v);

double concurrence_xstate(const XStateView& v);

/// X-state formula when the state is X-shaped to 1e-10, Wootters otherwise.
double concurrence(const DensityMatrix4& rho);

}  // namespace xsdyn
