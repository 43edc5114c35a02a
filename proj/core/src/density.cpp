#include "xsdyn/density.hpp"

#include <cmath>

#include "xsdyn/eigen.hpp"

namespace xsdyn {

const char* to_string(Basis basis) {
  return basis == Basis::Computational ? "computational" : "collective";
}

std::vector<Violation> check_density(const Mat4& m, const DensityTolerances& tol) {
  std::vector<Violation> out;
  if (!m.all_finite()) {
    out.push_back({ViolationKind::NonFinite, std::nan("")});
    return out;
  }
  const double herm = hermiticity_defect(m);
  if (herm > tol.hermitian) out.push_back({ViolationKind::NotHermitian, herm});

  const double trace_err = std::abs(m.trace() - 1.0);
  if (trace_err > tol.trace) out.push_back({ViolationKind::TraceNotOne, trace_err});

  // Positivity is judged on the Hermitian part so a Hermiticity failure
  // does not also abort the eigenvalue check.
  const auto eig = hermitian_eigenvalues(hermitian_part(m));
  if (eig[3] < -tol.positivity) out.push_back({ViolationKind::NotPositive, eig[3]});
  return out;
}

DensityMatrix4 validate_density(const Mat4& m, Basis basis, const DensityTolerances& tol) {
  auto violations = check_density(m, tol);
  if (!violations.empty()) throw DensityViolation(std::move(violations));
  return DensityMatrix4(m, basis);
}

double off_x_magnitude(const Mat4& m) {
  double worst = 0.0;
  for (std::size_t r = 0; r < 4; ++r)
    for (std::size_t c = 0; c < 4; ++c)
      if (r != c && r + c != 3) worst = std::max(worst, std::abs(m(r, c)));
  return worst;
}

XStateView extract_xstate(const DensityMatrix4& rho, double off_x_tol) {
  if (rho.basis() != Basis::Computational)
    throw WrongBasisTag("X-state view needs a computational-basis state");
  const Mat4& m = rho.matrix();
  const double off = off_x_magnitude(m);
  if (off > off_x_tol) throw NotXState(off);
  return {m(0, 0).real(), m(1, 1).real(), m(2, 2).real(), m(3, 3).real(), m(0, 3), m(1, 2)};
}

}  // namespace xsdyn
