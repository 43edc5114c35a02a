#include <gtest/gtest.h>

#include <algorithm>

#include <xsdyn/eigen.hpp>
#include <xsdyn/errors.hpp>

#include "generators.hpp"

namespace xsdyn {
namespace {

using testing::Rng;

// Matrix V diag(lambda) V^-1 with V = (I + upper triangular) Q, Q unitary.
Mat4 with_spectrum(Rng& rng, const std::array<cplx, 4>& lambda) {
  const Mat4 q = testing::random_unitary4(rng);
  Mat4 t = Mat4::identity();
  Mat4 tinv = Mat4::identity();
  const cplx a = 0.4 * rng.complex_normal();
  t(0, 1) = a;
  tinv(0, 1) = -a;
  const Mat4 v = t * q;
  const Mat4 vinv = q.adjoint() * tinv;
  return v * Mat4::diagonal(lambda) * vinv;
}

std::array<cplx, 4> sorted(std::array<cplx, 4> v) {
  std::sort(v.begin(), v.end(), [](cplx a, cplx b) {
    return a.real() != b.real() ? a.real() > b.real() : a.imag() > b.imag();
  });
  return v;
}

double spectrum_distance(const std::array<cplx, 4>& a, const std::array<cplx, 4>& b) {
  // Greedy matching; the spectra here are well separated.
  std::array<bool, 4> used{};
  double worst = 0.0;
  for (const auto& x : a) {
    double best = 1e300;
    std::size_t pick = 0;
    for (std::size_t j = 0; j < 4; ++j)
      if (!used[j] && std::abs(x - b[j]) < best) {
        best = std::abs(x - b[j]);
        pick = j;
      }
    used[pick] = true;
    worst = std::max(worst, best);
  }
  return worst;
}

TEST(Jacobi, DiagonalInputIsExact) {
  const Mat4 m = Mat4::diagonal({0.1, 0.7, -0.3, 0.5});
  const auto v = hermitian_eigenvalues(m);
  EXPECT_EQ(v, (std::array<double, 4>{0.7, 0.5, 0.1, -0.3}));
}

TEST(Jacobi, RecoversSpectrumOfUnitaryConjugate) {
  Rng rng(101);
  for (int trial = 0; trial < 200; ++trial) {
    std::array<double, 4> lambda{rng.normal(), rng.normal(), rng.normal(), rng.normal()};
    const Mat4 u = testing::random_unitary4(rng);
    const Mat4 m = hermitian_part(u * Mat4::diagonal({lambda[0], lambda[1], lambda[2], lambda[3]}) * u.adjoint());
    std::sort(lambda.begin(), lambda.end(), std::greater<>());
    const auto got = hermitian_eigenvalues(m);
    for (std::size_t i = 0; i < 4; ++i) EXPECT_NEAR(got[i], lambda[i], 1e-12);
  }
}

TEST(Jacobi, DegenerateSpectrum) {
  Rng rng(5);
  const Mat4 u = testing::random_unitary4(rng);
  const Mat4 m = hermitian_part(u * Mat4::diagonal({0.25, 0.25, 0.25, 0.25}) * u.adjoint());
  for (double v : hermitian_eigenvalues(m)) EXPECT_NEAR(v, 0.25, 1e-14);
}

TEST(Jacobi, TwoByTwo) {
  const Mat2 m = pauli::y();
  const auto v = hermitian_eigenvalues(m);
  EXPECT_NEAR(v[0], 1.0, 1e-15);
  EXPECT_NEAR(v[1], -1.0, 1e-15);
}

TEST(Jacobi, RejectsNonHermitian) {
  Mat4 m = Mat4::identity();
  m(0, 1) = 1e-6;
  EXPECT_THROW(hermitian_eigenvalues(m), ParameterOutOfRange);
}

TEST(Jacobi, ReportsSweeps) {
  Rng rng(3);
  const JacobiResult r = jacobi_eigen(testing::random_density_matrix(rng));
  EXPECT_GT(r.sweeps, 0);
  EXPECT_LE(r.sweeps, 50);
  EXPECT_LE(r.off_diagonal_norm, 1e-13);
}

TEST(Jacobi, ExhaustedBudgetThrows) {
  Rng rng(4);
  EXPECT_THROW(jacobi_eigen(testing::random_density_matrix(rng), 1), NoConvergence);
}

TEST(GeneralEigen, KnownComplexSpectrum) {
  Rng rng(202);
  for (int trial = 0; trial < 200; ++trial) {
    std::array<cplx, 4> lambda{};
    for (auto& l : lambda) l = rng.complex_normal();
    const Mat4 m = with_spectrum(rng, lambda);
    const Spectrum s = qr_eigenvalues(m);
    EXPECT_TRUE(s.converged);
    EXPECT_LT(spectrum_distance(s.values, lambda), 1e-10);
  }
}

TEST(GeneralEigen, SortedByRealThenImaginary) {
  const Mat4 m = Mat4::diagonal({cplx(0.0, 1.0), cplx(2.0, 0.0), cplx(0.0, -1.0), cplx(-1.0, 0.0)});
  const Spectrum s = qr_eigenvalues(m);
  EXPECT_EQ(s.values, sorted(s.values));
  EXPECT_EQ(s.values[0], cplx(2.0));
  EXPECT_EQ(s.values[1], cplx(0.0, 1.0));
}

TEST(GeneralEigen, DecoupledBlocksNeedNoIterations) {
  // Diagonal and anti-diagonal only: permutations split it into 2x2 blocks.
  Mat4 m = Mat4::diagonal({1.0, 2.0, 3.0, 4.0});
  m(0, 3) = 0.5;
  m(3, 0) = 0.5;
  const Spectrum s = qr_eigenvalues(m);
  EXPECT_EQ(s.iterations, 0);
  std::array<cplx, 4> expected{2.5 + std::sqrt(2.5), 3.0, 2.0, 2.5 - std::sqrt(2.5)};
  EXPECT_LT(spectrum_distance(s.values, expected), 1e-14);
}

TEST(GeneralEigen, JordanBlock) {
  Mat4 m = Mat4::identity();
  m(0, 1) = 1.0;
  m(1, 2) = 1.0;
  m(2, 3) = 1.0;
  const Spectrum s = general_eigenvalues(m);
  for (const auto& v : s.values) EXPECT_NEAR(std::abs(v - 1.0), 0.0, 1e-3);
}

TEST(CharacteristicPolynomial, MatchesRoots) {
  Rng rng(303);
  for (int trial = 0; trial < 100; ++trial) {
    std::array<cplx, 4> lambda{};
    for (auto& l : lambda) l = rng.complex_normal();
    const auto c = characteristic_polynomial(with_spectrum(rng, lambda));
    // Vieta: c3 = -sum, c0 = product.
    EXPECT_LT(std::abs(c[4] - 1.0), 1e-14);
    EXPECT_LT(std::abs(c[3] + (lambda[0] + lambda[1] + lambda[2] + lambda[3])), 1e-11);
    EXPECT_LT(std::abs(c[0] - lambda[0] * lambda[1] * lambda[2] * lambda[3]), 1e-10);
  }
}

TEST(Quartic, RootsOfKnownPolynomial) {
  Rng rng(404);
  for (int trial = 0; trial < 200; ++trial) {
    std::array<cplx, 4> r{};
    for (auto& x : r) x = rng.complex_normal();
    // Expand prod (z - r_i).
    std::array<cplx, 5> c{1.0, 0.0, 0.0, 0.0, 0.0};
    for (const auto& root : r) {
      std::array<cplx, 5> next{};
      for (std::size_t k = 0; k < 5; ++k) {
        if (k > 0) next[k] += c[k - 1];
        next[k] -= root * c[k];
      }
      c = next;
    }
    EXPECT_LT(spectrum_distance(quartic_roots(c), r), 1e-8);
  }
}

TEST(Quartic, RepeatedRoots) {
  // (z - 1)^2 (z + 2)^2 = z^4 + 2z^3 - 3z^2 - 4z + 4
  const auto roots = quartic_roots({4.0, -4.0, -3.0, 2.0, 1.0});
  int near_one = 0;
  int near_minus_two = 0;
  for (const auto& z : roots) {
    if (std::abs(z - 1.0) < 1e-6) ++near_one;
    if (std::abs(z + 2.0) < 1e-6) ++near_minus_two;
  }
  EXPECT_EQ(near_one, 2);
  EXPECT_EQ(near_minus_two, 2);
}

TEST(GeneralEigen, FallbackWhenBudgetExhausted) {
  Rng rng(505);
  std::array<cplx, 4> lambda{1.0, cplx(0.0, 2.0), -0.5, cplx(3.0, -1.0)};
  const Mat4 m = with_spectrum(rng, lambda);
  EXPECT_THROW(qr_eigenvalues(m, 0), NoConvergence);
  const Spectrum s = general_eigenvalues(m, 0);
  EXPECT_FALSE(s.converged);
  EXPECT_LT(spectrum_distance(s.values, lambda), 1e-8);
  EXPECT_EQ(s.values, sorted(s.values));
}

TEST(GeneralEigen, AgreesWithQuarticRoute) {
  Rng rng(606);
  for (int trial = 0; trial < 100; ++trial) {
    Mat4 m;
    for (std::size_t r = 0; r < 4; ++r)
      for (std::size_t c = 0; c < 4; ++c) m(r, c) = rng.complex_normal();
    EXPECT_LT(spectrum_distance(qr_eigenvalues(m).values, quartic_eigenvalues(m).values), 1e-8);
  }
}

}  // namespace
}  // namespace xsdyn
