#include "xsdyn/concurrence.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

namespace xsdyn {

namespace {

constexpr double kEigenClamp = 1e-9;

const Mat4& sigma_yy() {
  static const Mat4 yy = kron(pauli::y(), pauli::y());
  return yy;
}

// Radicands are products of populations, each >= -1e-12 for a valid state,
// so anything below zero here is rounding.
double clamped_sqrt(double v) { return std::sqrt(std::max(v, 0.0)); }

}  // namespace

Mat4 spin_flip(const DensityMatrix4& rho) {
  if (rho.basis() != Basis::Computational)
    throw WrongBasisTag("spin_flip needs a computational-basis state");
  const Mat4& yy = sigma_yy();
  return yy * rho.matrix().conjugate() * yy;
}

double concurrence_wootters(const DensityMatrix4& rho) {
  const Mat4 product = rho.matrix() * spin_flip(rho);
  const Spectrum spec = general_eigenvalues(product);

  std::array<double, 4> lambda{};
  for (std::size_t i = 0; i < 4; ++i) {
    const double v = spec.values[i].real();
    if (v < -kEigenClamp) throw NegativeEigenvalue(v);
    lambda[i] = std::max(v, 0.0);
  }
  std::sort(lambda.begin(), lambda.end(), std::greater<>());
  const double c = std::sqrt(lambda[0]) - std::sqrt(lambda[1]) - std::sqrt(lambda[2]) -
                   std::sqrt(lambda[3]);
  return std::max(0.0, c);
}

double XConcurrenceTerms::value() const { return std::max({0.0, c1, c2}); }

XConcurrenceTerms xstate_terms(const XStateView& v) {
  return {2.0 * (std::abs(v.z14) - clamped_sqrt(v.b * v.c)),
          2.0 * (std::abs(v.z23) - clamped_sqrt(v.a * v.d))};
}

double concurrence_xstate(const XStateView& v) { return xstate_terms(v).value(); }

double concurrence(const DensityMatrix4& rho) {
  if (rho.basis() == Basis::Computational && off_x_magnitude(rho.matrix()) <= 1e-10)
    return concurrence_xstate(extract_xstate(rho));
  return concurrence_wootters(rho);
}

}  // namespace xsdyn
