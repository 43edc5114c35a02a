#include "xsdyn/states.hpp"

#include <cmath>
#include <string>

namespace xsdyn {

namespace {

void require_coherence(double x, const char* who) {
  if (!(x > 0.0 && x <= 1.0))
    throw ParameterOutOfRange(std::string(who) + ": coherence x must lie in (0, 1], got " +
                              std::to_string(x));
}

// Hermitian part drops the rounding residue of the two products.
Mat4 conjugate_by(const Mat4& u, const Mat4& m) { return hermitian_part(u * m * u.adjoint()); }

}  // namespace

const char* to_string(StateKind kind) {
  switch (kind) {
    case StateKind::Werner:
      return "werner";
    case StateKind::MnmsTwoPhoton:
      return "mnms2";
    case StateKind::MnmsOnePhoton:
      return "mnms1";
    case StateKind::MemsTwoPhoton:
      return "mems2";
    case StateKind::MemsOnePhoton:
      return "mems1";
    case StateKind::Bell:
      return "bell";
  }
  return "unknown";
}

DensityMatrix4 bell_state(BellState which) {
  const double h = 1.0 / std::sqrt(2.0);
  std::array<cplx, 4> v{};
  switch (which) {
    case BellState::PhiPlus:
      v = {h, 0.0, 0.0, h};
      break;
    case BellState::PhiMinus:
      v = {h, 0.0, 0.0, -h};
      break;
    case BellState::PsiPlus:
      v = {0.0, h, h, 0.0};
      break;
    case BellState::PsiMinus:
      v = {0.0, h, -h, 0.0};
      break;
  }
  // Entries are exactly +-1/2 up to the rounding of h*h; pin them.
  Mat4 m = outer(v, v);
  for (std::size_t r = 0; r < 4; ++r)
    for (std::size_t c = 0; c < 4; ++c)
      if (m(r, c) != cplx{}) m(r, c) = m(r, c).real() > 0 ? 0.5 : -0.5;
  return validate_density(m);
}

DensityMatrix4 werner(double p, BellState which) {
  if (!(p >= 0.0 && p <= 1.0))
    throw ParameterOutOfRange("werner: p must lie in [0, 1], got " + std::to_string(p));
  return validate_density(0.25 * (1.0 - p) * Mat4::identity() + p * bell_state(which).matrix());
}

DensityMatrix4 mnms_two_photon(double x) {
  require_coherence(x, "mnms_two_photon");
  Mat4 m;
  m(0, 0) = m(3, 3) = 0.5;
  m(0, 3) = m(3, 0) = 0.5 * x;
  return validate_density(m);
}

DensityMatrix4 mnms_one_photon(double x) {
  require_coherence(x, "mnms_one_photon");
  Mat4 m;
  m(1, 1) = m(2, 2) = 0.5;
  m(1, 2) = m(2, 1) = 0.5 * x;
  return validate_density(m);
}

double mems_branch(double x) { return x < 2.0 / 3.0 ? 1.0 / 3.0 : 0.5 * x; }

DensityMatrix4 mems_two_photon(double x) {
  require_coherence(x, "mems_two_photon");
  const double g = mems_branch(x);
  Mat4 m;
  m(0, 0) = m(3, 3) = g;
  m(1, 1) = 1.0 - 2.0 * g;
  m(0, 3) = m(3, 0) = 0.5 * x;
  return validate_density(m);
}

DensityMatrix4 mems_one_photon(double x) {
  require_coherence(x, "mems_one_photon");
  const double g = mems_branch(x);
  Mat4 m;
  m(0, 0) = 1.0 - 2.0 * g;
  m(1, 1) = m(2, 2) = g;
  m(1, 2) = m(2, 1) = 0.5 * x;
  return validate_density(m);
}

DensityMatrix4 make_state(const StateFamily& family) {
  switch (family.kind) {
    case StateKind::Werner:
      return werner(family.parameter);
    case StateKind::MnmsTwoPhoton:
      return mnms_two_photon(family.parameter);
    case StateKind::MnmsOnePhoton:
      return mnms_one_photon(family.parameter);
    case StateKind::MemsTwoPhoton:
      return mems_two_photon(family.parameter);
    case StateKind::MemsOnePhoton:
      return mems_one_photon(family.parameter);
    case StateKind::Bell: {
      const double idx = family.parameter;
      if (idx != 0.0 && idx != 1.0 && idx != 2.0 && idx != 3.0)
        throw ParameterOutOfRange("bell: index must be 0, 1, 2 or 3");
      return bell_state(static_cast<BellState>(static_cast<int>(idx)));
    }
  }
  throw ParameterOutOfRange("unknown state family");
}

const Mat4& collective_transform() {
  static const Mat4 u = [] {
    const double h = 1.0 / std::sqrt(2.0);
    Mat4 m;
    m(0, 0) = 1.0;
    m(1, 1) = h;
    m(1, 2) = h;
    m(2, 1) = -h;
    m(2, 2) = h;
    m(3, 3) = 1.0;
    return m;
  }();
  return u;
}

DensityMatrix4 to_collective(const DensityMatrix4& rho) {
  if (rho.basis() != Basis::Computational)
    throw WrongBasisTag("to_collective expects a computational-basis state");
  return validate_density(conjugate_by(collective_transform(), rho.matrix()), Basis::Collective);
}

DensityMatrix4 from_collective(const DensityMatrix4& rho) {
  if (rho.basis() != Basis::Collective)
    throw WrongBasisTag("from_collective expects a collective-basis state");
  return validate_density(conjugate_by(collective_transform().adjoint(), rho.matrix()),
                          Basis::Computational);
}

}  // namespace xsdyn
