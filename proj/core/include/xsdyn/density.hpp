#pragma once

#include <vector>

#include "xsdyn/errors.hpp"
#include "xsdyn/matrix.hpp"

namespace xsdyn {

// Basis ordering, computational: |gg>, |g e>, |e g>, |ee> (qubit 1 first).
// Collective (Dicke): |g>, |s>, |a>, |e>.
enum class Basis { Computational, Collective };

const char* to_string(Basis basis);

struct DensityTolerances {
  double hermitian = 1e-12;
  double trace = 1e-12;
  double positivity = 1e-10;
};

/// Every failed invariant of `m` as a density matrix; empty when valid.
std::vector<Violation> check_density(const Mat4& m, const DensityTolerances& tol = {});

// A validated two-qubit density matrix. Instances only come out of
// validate_density, so holding one means the invariants held at
// construction.
class DensityMatrix4 {
 public:
  const Mat4& matrix() const& { return m_; }
  Mat4 matrix() && { return m_; }
  Basis basis() const { return basis_; }
  cplx operator()(std::size_t r, std::size_t c) const { return m_(r, c); }

 private:
  DensityMatrix4(const Mat4& m, Basis basis) : m_(m), basis_(basis) {}
  friend DensityMatrix4 validate_density(const Mat4&, Basis, const DensityTolerances&);

  Mat4 m_;
  Basis basis_;
};

/// Returns the typed state or throws DensityViolation listing each failed
/// invariant with its measured magnitude.
DensityMatrix4 validate_density(const Mat4& m, Basis basis = Basis::Computational,
                                const DensityTolerances& tol = {});

/// Largest modulus among the entries outside the main and anti-diagonal.
double off_x_magnitude(const Mat4& m);

// Diagonal and anti-diagonal of an X-shaped computational-basis state.
struct XStateView {
  double a;  // rho_11
  double b;  // rho_22
  double c;  // rho_33
  double d;  // rho_44
  cplx z14;
  cplx z23;
};

/// Throws WrongBasisTag for collective-basis input and NotXState if any
/// off-X entry exceeds `off_x_tol` in modulus.
XStateView extract_xstate(const DensityMatrix4& rho, double off_x_tol = 1e-10);

}  // namespace xsdyn
