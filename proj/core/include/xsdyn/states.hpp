#pragma once

#include "xsdyn/density.hpp"

namespace xsdyn {

enum class BellState { PhiPlus, PhiMinus, PsiPlus, PsiMinus };

enum class StateKind { Werner, MnmsTwoPhoton, MnmsOnePhoton, MemsTwoPhoton, MemsOnePhoton, Bell };

// `parameter` is p for Werner, the coherence x for MNMS/MEMS and the Bell
// index 0..3 (PhiPlus, PhiMinus, PsiPlus, PsiMinus) for Bell.
struct StateFamily {
  StateKind kind;
  double parameter;
};

const char* to_string(StateKind kind);

DensityMatrix4 bell_state(BellState which);

/// (1-p)/4 I + p |M><M|, 0 <= p <= 1.
DensityMatrix4 werner(double p, BellState which = BellState::PhiPlus);

// MNMS/MEMS constructors take the initial coherence x in (0, 1] and throw
// ParameterOutOfRange otherwise (x = 0 is rejected, not mapped to a
// separable state).

/// rho_11 = rho_44 = 1/2, rho_14 = x/2.
DensityMatrix4 mnms_two_photon(double x);
/// rho_22 = rho_33 = 1/2, rho_23 = x/2.
DensityMatrix4 mnms_one_photon(double x);

/// MEMS branch function: 1/3 for x < 2/3, x/2 for 2/3 <= x <= 1.
double mems_branch(double x);

/// rho_11 = rho_44 = g, rho_22 = 1 - 2g, rho_14 = x/2.
DensityMatrix4 mems_two_photon(double x);
/// rho_11 = 1 - 2g, rho_22 = rho_33 = g, rho_23 = x/2.
DensityMatrix4 mems_one_photon(double x);

DensityMatrix4 make_state(const StateFamily& family);

/// Rows are <g|, <s|, <a|, <e| in the computational basis, with
/// |s> = (|eg> + |ge>)/sqrt2 and |a> = (|eg> - |ge>)/sqrt2.
const Mat4& collective_transform();

/// U rho U^dagger; throws WrongBasisTag unless `rho` is computational.
DensityMatrix4 to_collective(const DensityMatrix4& rho);
/// U^dagger rho U; throws WrongBasisTag unless `rho` is collective.
DensityMatrix4 from_collective(const DensityMatrix4& rho);

}  // namespace xsdyn
