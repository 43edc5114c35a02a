#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <initializer_list>

namespace xsdyn {

using cplx = std::complex<double>;

inline constexpr cplx kI{0.0, 1.0};

// Dense fixed-size complex matrix, row-major. Only N = 2 (single qubit) and
// N = 4 (two qubits) are used by the library.
template <std::size_t N>
class Matrix {
  static_assert(N == 2 || N == 4, "xsdyn matrices are 2x2 or 4x4");

 public:
  static constexpr std::size_t dim = N;

  constexpr Matrix() : a_{} {}

  // Row-major initializer; missing trailing entries are zero.
  Matrix(std::initializer_list<cplx> values) : a_{} {
    std::size_t k = 0;
    for (const auto& v : values) {
      if (k == N * N) break;
      a_[k++] = v;
    }
  }

  static Matrix zero() { return Matrix{}; }

  static Matrix identity() {
    Matrix m;
    for (std::size_t i = 0; i < N; ++i) m(i, i) = 1.0;
    return m;
  }

  static Matrix diagonal(const std::array<cplx, N>& d) {
    Matrix m;
    for (std::size_t i = 0; i < N; ++i) m(i, i) = d[i];
    return m;
  }

  cplx& operator()(std::size_t r, std::size_t c) { return a_[r * N + c]; }
  const cplx& operator()(std::size_t r, std::size_t c) const { return a_[r * N + c]; }

  const std::array<cplx, N * N>& data() const { return a_; }

  Matrix adjoint() const {
    Matrix m;
    for (std::size_t r = 0; r < N; ++r)
      for (std::size_t c = 0; c < N; ++c) m(c, r) = std::conj((*this)(r, c));
    return m;
  }

  Matrix conjugate() const {
    Matrix m;
    for (std::size_t k = 0; k < N * N; ++k) m.a_[k] = std::conj(a_[k]);
    return m;
  }

  cplx trace() const {
    cplx t = 0.0;
    for (std::size_t i = 0; i < N; ++i) t += (*this)(i, i);
    return t;
  }

  double max_abs() const {
    double m = 0.0;
    for (const auto& v : a_) m = std::max(m, std::abs(v));
    return m;
  }

  double frobenius_norm() const {
    double s = 0.0;
    for (const auto& v : a_) s += std::norm(v);
    return std::sqrt(s);
  }

  bool all_finite() const {
    for (const auto& v : a_)
      if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) return false;
    return true;
  }

  Matrix& operator+=(const Matrix& o) {
    for (std::size_t k = 0; k < N * N; ++k) a_[k] += o.a_[k];
    return *this;
  }
  Matrix& operator-=(const Matrix& o) {
    for (std::size_t k = 0; k < N * N; ++k) a_[k] -= o.a_[k];
    return *this;
  }
  Matrix& operator*=(cplx s) {
    for (auto& v : a_) v *= s;
    return *this;
  }

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(Matrix a, cplx s) { return a *= s; }
  friend Matrix operator*(cplx s, Matrix a) { return a *= s; }
  friend Matrix operator*(double s, Matrix a) { return a *= cplx(s); }
  friend Matrix operator*(Matrix a, double s) { return a *= cplx(s); }

  friend Matrix operator*(const Matrix& x, const Matrix& y) {
    Matrix m;
    for (std::size_t r = 0; r < N; ++r)
      for (std::size_t k = 0; k < N; ++k) {
        const cplx xr = x(r, k);
        if (xr == cplx{}) continue;
        for (std::size_t c = 0; c < N; ++c) m(r, c) += xr * y(k, c);
      }
    return m;
  }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::array<cplx, N * N> a_;
};

using Mat2 = Matrix<2>;
using Mat4 = Matrix<4>;

// Kronecker product; the first factor indexes the most significant bit, so
// |q1 q2> sits at row 2*q1 + q2.
inline Mat4 kron(const Mat2& a, const Mat2& b) {
  Mat4 m;
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      for (std::size_t k = 0; k < 2; ++k)
        for (std::size_t l = 0; l < 2; ++l) m(2 * i + k, 2 * j + l) = a(i, j) * b(k, l);
  return m;
}

// max_ij |a_ij - b_ij|
template <std::size_t N>
double max_abs_diff(const Matrix<N>& a, const Matrix<N>& b) {
  return (a - b).max_abs();
}

// |M - M^dagger|_max
template <std::size_t N>
double hermiticity_defect(const Matrix<N>& m) {
  return (m - m.adjoint()).max_abs();
}

template <std::size_t N>
Matrix<N> hermitian_part(const Matrix<N>& m) {
  return 0.5 * (m + m.adjoint());
}

// Outer product |u><v|.
template <std::size_t N>
Matrix<N> outer(const std::array<cplx, N>& u, const std::array<cplx, N>& v) {
  Matrix<N> m;
  for (std::size_t r = 0; r < N; ++r)
    for (std::size_t c = 0; c < N; ++c) m(r, c) = u[r] * std::conj(v[c]);
  return m;
}

namespace pauli {
inline Mat2 x() { return Mat2{0.0, 1.0, 1.0, 0.0}; }
inline Mat2 y() { return Mat2{0.0, -kI, kI, 0.0}; }
inline Mat2 z() { return Mat2{1.0, 0.0, 0.0, -1.0}; }
}  // namespace pauli

}  // namespace xsdyn
