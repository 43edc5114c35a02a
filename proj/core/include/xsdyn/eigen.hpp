#pragma once

#include <array>

#include "xsdyn/matrix.hpp"

namespace xsdyn {

/// Eigenvalues of a Hermitian matrix by cyclic complex Jacobi rotations,
/// sorted in descending order.
///
/// Rotations continue until the off-diagonal Frobenius norm is at most
/// 1e-13 * max(1, |m|_F), for at most 50 sweeps. Throws ParameterOutOfRange
/// if `m` departs from Hermiticity by more than 1e-10 and NoConvergence if
/// the sweep budget is exhausted.
template <std::size_t N>
std::array<double, N> hermitian_eigenvalues(const Matrix<N>& m);

/// Number of sweeps the last Jacobi run needed is reported here for tests
/// and benchmarks.
struct JacobiResult {
  std::array<double, 4> values;
  int sweeps;
  double off_diagonal_norm;
};
JacobiResult jacobi_eigen(const Mat4& m, int max_sweeps = 50);

struct Spectrum {
  // Sorted by descending real part, then descending imaginary part.
  std::array<cplx, 4> values;
  // False when the QR iteration ran out of budget and the quartic fallback
  // produced `values`.
  bool converged;
  // QR iterations spent (not counting deflations by permutation).
  int iterations;
};

/// Eigenvalues of a general complex 4x4 matrix: permutation isolation of
/// decoupled rows/columns, Householder reduction to upper Hessenberg form,
/// then implicitly shifted complex QR with Wilkinson shifts. A subdiagonal
/// entry is deflated once it falls below 1e-13 times the sum of the moduli
/// of its neighbouring diagonal entries. Throws NoConvergence after
/// `max_iterations` QR steps.
Spectrum qr_eigenvalues(const Mat4& m, int max_iterations = 200);

/// Coefficients c0..c4 of det(lambda I - m) = sum_k c_k lambda^k (c4 = 1),
/// by the Faddeev-LeVerrier recursion.
std::array<cplx, 5> characteristic_polynomial(const Mat4& m);

/// Closed-form (Ferrari) roots of a monic quartic given by `coeffs` as
/// returned by characteristic_polynomial, polished by Newton steps.
std::array<cplx, 4> quartic_roots(const std::array<cplx, 5>& coeffs);

/// Eigenvalues via the characteristic polynomial and quartic_roots.
Spectrum quartic_eigenvalues(const Mat4& m);

/// QR eigenvalues, falling back to the quartic route when QR does not
/// converge within `max_iterations`.
Spectrum general_eigenvalues(const Mat4& m, int max_iterations = 200);

}  // namespace xsdyn
