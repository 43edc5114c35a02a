#pragma once

#include "xsdyn/coupling.hpp"
#include "xsdyn/density.hpp"
#include "xsdyn/trajectory.hpp"

namespace xsdyn {

/// Closed-form vacuum-bath evolution of an X-state, applied element by
/// element in the collective basis:
///
///   rho_ee(t) = rho_ee(0) e^{-2 g t}
///   rho_ss(t) = rho_ss(0) e^{-(g+g12) t}
///               + rho_ee(0) (g+g12)/(g-g12) [e^{(g-g12) t} - 1] e^{-2 g t}
///   rho_aa(t) = rho_aa(0) e^{-(g-g12) t}
///               + rho_ee(0) (g-g12)/(g+g12) [e^{(g+g12) t} - 1] e^{-2 g t}
///   rho_gg(t) = 1 - rho_ee - rho_ss - rho_aa
///   rho_ge(t) = rho_ge(0) e^{-g t}
///   rho_sa(t) = rho_sa(0) e^{-(g + 2 i Omega12) t}
///
/// When |g -/+ g12| < 1e-12 the bracket over the rate difference is replaced
/// by its limit, t. The result is returned in the basis of `rho0`.
/// Throws NotXState if `rho0` has support outside these elements.
DensityMatrix4 analytic_xstate_propagate(const DensityMatrix4& rho0, const CouplingParams& params,
                                         double t);

/// t -> analytic_xstate_propagate(rho0, params, t), validated once up front.
StateAt analytic_state_map(const DensityMatrix4& rho0, const CouplingParams& params);

}  // namespace xsdyn
