#include "xsdyn/eigen.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <utility>

#include "xsdyn/errors.hpp"

namespace xsdyn {

namespace {

constexpr double kHermitianInputTol = 1e-10;
constexpr double kJacobiOffTol = 1e-13;
constexpr double kDeflationTol = 1e-13;
constexpr double kTiny = std::numeric_limits<double>::min();

template <std::size_t N>
double off_diagonal_norm(const Matrix<N>& a) {
  double s = 0.0;
  for (std::size_t r = 0; r < N; ++r)
    for (std::size_t c = 0; c < N; ++c)
      if (r != c) s += std::norm(a(r, c));
  return std::sqrt(s);
}

template <std::size_t N>
struct JacobiRun {
  std::array<double, N> values;
  int sweeps;
  double off;
};

template <std::size_t N>
JacobiRun<N> run_jacobi(const Matrix<N>& m, int max_sweeps) {
  const double defect = hermiticity_defect(m);
  if (defect > kHermitianInputTol)
    throw ParameterOutOfRange("hermitian_eigenvalues: input not Hermitian (defect " +
                              std::to_string(defect) + ")");

  Matrix<N> a = hermitian_part(m);
  for (std::size_t i = 0; i < N; ++i) a(i, i) = a(i, i).real();

  const double tol = kJacobiOffTol * std::max(1.0, a.frobenius_norm());
  int sweep = 0;
  double off = off_diagonal_norm(a);
  while (off > tol) {
    if (sweep == max_sweeps)
      throw NoConvergence("Jacobi eigenvalue sweeps exhausted", sweep);
    for (std::size_t p = 0; p + 1 < N; ++p) {
      for (std::size_t q = p + 1; q < N; ++q) {
        const cplx apq = a(p, q);
        const double mag = std::abs(apq);
        if (mag < kTiny) continue;
        const cplx phase = apq / mag;
        const cplx phase_c = std::conj(phase);
        const double alpha = a(p, p).real();
        const double delta = a(q, q).real();
        const double tau = (delta - alpha) / (2.0 * mag);
        const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;

        // a <- a G, G = [[c, s], [-s conj(phase), c conj(phase)]] on (p, q)
        for (std::size_t k = 0; k < N; ++k) {
          const cplx akp = a(k, p);
          const cplx akq = a(k, q);
          a(k, p) = c * akp - s * phase_c * akq;
          a(k, q) = s * akp + c * phase_c * akq;
        }
        // a <- G^dagger a
        for (std::size_t k = 0; k < N; ++k) {
          const cplx bpk = a(p, k);
          const cplx bqk = a(q, k);
          a(p, k) = c * bpk - s * phase * bqk;
          a(q, k) = s * bpk + c * phase * bqk;
        }
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        a(p, p) = alpha - t * mag;
        a(q, q) = delta + t * mag;
      }
    }
    ++sweep;
    off = off_diagonal_norm(a);
  }

  JacobiRun<N> out{};
  for (std::size_t i = 0; i < N; ++i) out.values[i] = a(i, i).real();
  std::sort(out.values.begin(), out.values.end(), std::greater<>());
  out.sweeps = sweep;
  out.off = off;
  return out;
}

void sort_spectrum(std::array<cplx, 4>& v) {
  std::sort(v.begin(), v.end(), [](const cplx& x, const cplx& y) {
    if (x.real() != y.real()) return x.real() > y.real();
    return x.imag() > y.imag();
  });
}

// Eigenvalues of [[a, b], [c, d]]. The smaller root comes from the
// determinant to avoid cancellation when the two are of different size.
std::pair<cplx, cplx> eig2x2(cplx a, cplx b, cplx c, cplx d) {
  const cplx mean = 0.5 * (a + d);
  const cplx half_diff = 0.5 * (a - d);
  cplx disc = std::sqrt(half_diff * half_diff + b * c);
  if ((std::conj(mean) * disc).real() < 0.0) disc = -disc;
  const cplx big = mean + disc;
  if (std::abs(big) < kTiny) return {big, mean - disc};
  const cplx det = a * d - b * c;
  return {big, det / big};
}

// Square working array with runtime size n <= 4.
struct Work {
  std::array<cplx, 16> v{};
  std::size_t n = 0;
  cplx& operator()(std::size_t r, std::size_t c) { return v[r * 4 + c]; }
  cplx operator()(std::size_t r, std::size_t c) const { return v[r * 4 + c]; }
};

void reduce_to_hessenberg(Work& h) {
  const std::size_t n = h.n;
  for (std::size_t k = 0; k + 2 < n; ++k) {
    // Householder reflector annihilating h(k+2..n-1, k).
    double alpha_norm = 0.0;
    for (std::size_t i = k + 1; i < n; ++i) alpha_norm += std::norm(h(i, k));
    alpha_norm = std::sqrt(alpha_norm);
    double tail = 0.0;
    for (std::size_t i = k + 2; i < n; ++i) tail += std::norm(h(i, k));
    if (tail == 0.0) continue;

    const cplx x0 = h(k + 1, k);
    const cplx phase = std::abs(x0) > 0.0 ? x0 / std::abs(x0) : cplx(1.0);
    const cplx beta = -phase * alpha_norm;

    std::array<cplx, 4> u{};
    u[k + 1] = x0 - beta;
    for (std::size_t i = k + 2; i < n; ++i) u[i] = h(i, k);
    double unorm2 = 0.0;
    for (std::size_t i = k + 1; i < n; ++i) unorm2 += std::norm(u[i]);
    if (unorm2 == 0.0) continue;

    // h <- P h, P = I - 2 u u^dagger / |u|^2
    for (std::size_t c = 0; c < n; ++c) {
      cplx dot = 0.0;
      for (std::size_t i = k + 1; i < n; ++i) dot += std::conj(u[i]) * h(i, c);
      const cplx f = 2.0 * dot / unorm2;
      for (std::size_t i = k + 1; i < n; ++i) h(i, c) -= f * u[i];
    }
    // h <- h P
    for (std::size_t r = 0; r < n; ++r) {
      cplx dot = 0.0;
      for (std::size_t i = k + 1; i < n; ++i) dot += h(r, i) * u[i];
      const cplx f = 2.0 * dot / unorm2;
      for (std::size_t i = k + 1; i < n; ++i) h(r, i) -= f * std::conj(u[i]);
    }
    h(k + 1, k) = beta;
    for (std::size_t i = k + 2; i < n; ++i) h(i, k) = 0.0;
  }
}

// Shifted QR on an upper Hessenberg matrix; appends eigenvalues to `out`.
int hessenberg_qr(Work& h, std::array<cplx, 4>& out, std::size_t& count, int budget) {
  int iterations = 0;
  int since_deflation = 0;
  std::ptrdiff_t hi = static_cast<std::ptrdiff_t>(h.n) - 1;
  while (hi >= 0) {
    if (hi == 0) {
      out[count++] = h(0, 0);
      break;
    }
    std::ptrdiff_t lo = hi;
    while (lo > 0) {
      const double sub = std::abs(h(lo, lo - 1));
      const double neighbours = std::abs(h(lo, lo)) + std::abs(h(lo - 1, lo - 1));
      if (sub <= kDeflationTol * neighbours || sub < kTiny) {
        h(lo, lo - 1) = 0.0;
        break;
      }
      --lo;
    }
    if (lo == hi) {
      out[count++] = h(hi, hi);
      --hi;
      since_deflation = 0;
      continue;
    }
    if (lo == hi - 1) {
      const auto [l1, l2] = eig2x2(h(lo, lo), h(lo, hi), h(hi, lo), h(hi, hi));
      out[count++] = l1;
      out[count++] = l2;
      hi -= 2;
      since_deflation = 0;
      continue;
    }
    if (iterations == budget)
      throw NoConvergence("QR iteration budget exhausted", iterations);

    cplx shift;
    if (since_deflation == 10 || since_deflation == 20) {
      shift = h(hi, hi) + 0.75 * std::abs(h(hi, hi - 1).real());
    } else {
      const auto [l1, l2] =
          eig2x2(h(hi - 1, hi - 1), h(hi - 1, hi), h(hi, hi - 1), h(hi, hi));
      shift = std::abs(l1 - h(hi, hi)) < std::abs(l2 - h(hi, hi)) ? l1 : l2;
    }

    const auto l = static_cast<std::size_t>(lo);
    const auto u = static_cast<std::size_t>(hi);
    for (std::size_t k = l; k <= u; ++k) h(k, k) -= shift;
    std::array<cplx, 4> gx{}, gy{};
    for (std::size_t k = l; k < u; ++k) {
      const cplx x = h(k, k);
      const cplx y = h(k + 1, k);
      const double r = std::hypot(std::abs(x), std::abs(y));
      if (r == 0.0) {
        gx[k] = 1.0;
        gy[k] = 0.0;
        continue;
      }
      gx[k] = x / r;
      gy[k] = y / r;
      for (std::size_t c = k; c <= u; ++c) {
        const cplx a = h(k, c);
        const cplx b = h(k + 1, c);
        h(k, c) = std::conj(gx[k]) * a + std::conj(gy[k]) * b;
        h(k + 1, c) = -gy[k] * a + gx[k] * b;
      }
      h(k + 1, k) = 0.0;
    }
    for (std::size_t k = l; k < u; ++k) {
      const std::size_t last = std::min(k + 2, u);
      for (std::size_t r = l; r <= last; ++r) {
        const cplx a = h(r, k);
        const cplx b = h(r, k + 1);
        h(r, k) = gx[k] * a + gy[k] * b;
        h(r, k + 1) = -std::conj(gy[k]) * a + std::conj(gx[k]) * b;
      }
    }
    for (std::size_t k = l; k <= u; ++k) h(k, k) += shift;
    ++iterations;
    ++since_deflation;
  }
  return iterations;
}

cplx eval_poly(const std::array<cplx, 5>& c, cplx z) {
  return (((c[4] * z + c[3]) * z + c[2]) * z + c[1]) * z + c[0];
}

cplx eval_poly_derivative(const std::array<cplx, 5>& c, cplx z) {
  return ((4.0 * c[4] * z + 3.0 * c[3]) * z + 2.0 * c[2]) * z + c[1];
}

// One root of z^3 + a z^2 + b z + c, the one of largest modulus.
cplx cubic_largest_root(cplx a, cplx b, cplx c) {
  const cplx p = b - a * a / 3.0;
  const cplx q = 2.0 * a * a * a / 27.0 - a * b / 3.0 + c;
  const cplx s = std::sqrt(q * q / 4.0 + p * p * p / 27.0);
  cplx w = -q / 2.0 + s;
  if (std::abs(-q / 2.0 - s) > std::abs(w)) w = -q / 2.0 - s;
  const cplx offset = -a / 3.0;
  if (std::abs(w) == 0.0) return offset;
  const cplx u = std::pow(w, 1.0 / 3.0);
  const cplx omega(-0.5, std::sqrt(3.0) / 2.0);
  cplx best = offset;
  cplx uk = u;
  for (int k = 0; k < 3; ++k) {
    const cplx z = uk - p / (3.0 * uk) + offset;
    if (std::abs(z) > std::abs(best)) best = z;
    uk *= omega;
  }
  return best;
}

std::pair<cplx, cplx> quadratic_roots(cplx b, cplx c) {
  // z^2 + b z + c
  cplx disc = std::sqrt(b * b - 4.0 * c);
  if ((std::conj(b) * disc).real() < 0.0) disc = -disc;
  const cplx big = -0.5 * (b + disc);
  if (std::abs(big) == 0.0) return {0.0, 0.0};
  return {big, c / big};
}

}  // namespace

template <std::size_t N>
std::array<double, N> hermitian_eigenvalues(const Matrix<N>& m) {
  return run_jacobi(m, 50).values;
}

template std::array<double, 2> hermitian_eigenvalues<2>(const Mat2&);
template std::array<double, 4> hermitian_eigenvalues<4>(const Mat4&);

JacobiResult jacobi_eigen(const Mat4& m, int max_sweeps) {
  const auto run = run_jacobi(m, max_sweeps);
  return {run.values, run.sweeps, run.off};
}

Spectrum qr_eigenvalues(const Mat4& m, int max_iterations) {
  std::array<cplx, 16> full{};
  for (std::size_t r = 0; r < 4; ++r)
    for (std::size_t c = 0; c < 4; ++c) full[r * 4 + c] = m(r, c);
  auto at = [&full](std::size_t r, std::size_t c) -> cplx& { return full[r * 4 + c]; };
  auto swap_index = [&](std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t c = 0; c < 4; ++c) std::swap(at(i, c), at(j, c));
    for (std::size_t r = 0; r < 4; ++r) std::swap(at(r, i), at(r, j));
  };

  Spectrum spec{};
  std::size_t count = 0;

  // Isolate eigenvalues exposed by exact zero structure: a row whose
  // off-diagonal part inside the active window vanishes is moved to the
  // bottom, a column likewise to the top.
  std::size_t lo = 0;
  std::size_t hi = 3;
  bool found = true;
  while (found && lo <= hi) {
    found = false;
    for (std::size_t j = hi + 1; j-- > lo;) {
      bool isolated = true;
      for (std::size_t i = lo; i <= hi && isolated; ++i)
        if (i != j && at(j, i) != cplx{}) isolated = false;
      if (isolated) {
        swap_index(j, hi);
        spec.values[count++] = at(hi, hi);
        found = true;
        if (hi == lo) {
          lo = hi + 1;
        } else {
          --hi;
        }
        break;
      }
    }
    if (found || lo > hi) continue;
    for (std::size_t j = lo; j <= hi; ++j) {
      bool isolated = true;
      for (std::size_t i = lo; i <= hi && isolated; ++i)
        if (i != j && at(i, j) != cplx{}) isolated = false;
      if (isolated) {
        swap_index(j, lo);
        spec.values[count++] = at(lo, lo);
        found = true;
        ++lo;
        break;
      }
    }
  }

  if (lo <= hi) {
    Work w;
    w.n = hi - lo + 1;
    for (std::size_t r = 0; r < w.n; ++r)
      for (std::size_t c = 0; c < w.n; ++c) w(r, c) = at(lo + r, lo + c);
    reduce_to_hessenberg(w);
    spec.iterations = hessenberg_qr(w, spec.values, count, max_iterations);
  }
  spec.converged = true;
  sort_spectrum(spec.values);
  return spec;
}

std::array<cplx, 5> characteristic_polynomial(const Mat4& a) {
  std::array<cplx, 5> c{};
  c[4] = 1.0;
  Mat4 mk;  // M_0 = 0
  for (int k = 1; k <= 4; ++k) {
    mk = a * mk + c[static_cast<std::size_t>(5 - k)] * Mat4::identity();
    c[static_cast<std::size_t>(4 - k)] = -(a * mk).trace() / static_cast<double>(k);
  }
  return c;
}

std::array<cplx, 4> quartic_roots(const std::array<cplx, 5>& coeffs) {
  const cplx a = coeffs[3] / coeffs[4];
  const cplx b = coeffs[2] / coeffs[4];
  const cplx c = coeffs[1] / coeffs[4];
  const cplx d = coeffs[0] / coeffs[4];

  // Depressed quartic y^4 + p y^2 + q y + r with lambda = y - a/4.
  const cplx a2 = a * a;
  const cplx p = b - 3.0 * a2 / 8.0;
  const cplx q = c - a * b / 2.0 + a2 * a / 8.0;
  const cplx r = d - a * c / 4.0 + a2 * b / 16.0 - 3.0 * a2 * a2 / 256.0;

  std::array<cplx, 4> y{};
  const double scale = std::max({1.0, std::abs(p), std::abs(r)});
  if (std::abs(q) <= 1e-14 * scale) {
    const auto [z1, z2] = quadratic_roots(p, r);
    y = {std::sqrt(z1), -std::sqrt(z1), std::sqrt(z2), -std::sqrt(z2)};
  } else {
    // Resolvent cubic m^3 + p m^2 + (p^2/4 - r) m - q^2/8 = 0.
    const cplx m = cubic_largest_root(p, p * p / 4.0 - r, -q * q / 8.0);
    const cplx s = std::sqrt(2.0 * m);
    const auto [y1, y2] = quadratic_roots(-s, p / 2.0 + m + q / (2.0 * s));
    const auto [y3, y4] = quadratic_roots(s, p / 2.0 + m - q / (2.0 * s));
    y = {y1, y2, y3, y4};
  }

  std::array<cplx, 4> roots{};
  const std::array<cplx, 5> monic{d, c, b, a, 1.0};
  for (std::size_t i = 0; i < 4; ++i) {
    cplx z = y[i] - a / 4.0;
    for (int it = 0; it < 4; ++it) {
      const cplx f = eval_poly(monic, z);
      const cplx fp = eval_poly_derivative(monic, z);
      if (std::abs(fp) < kTiny) break;
      const cplx next = z - f / fp;
      if (std::abs(eval_poly(monic, next)) >= std::abs(f)) break;
      z = next;
    }
    roots[i] = z;
  }
  return roots;
}

Spectrum quartic_eigenvalues(const Mat4& m) {
  Spectrum spec{};
  spec.values = quartic_roots(characteristic_polynomial(m));
  spec.converged = false;
  spec.iterations = 0;
  sort_spectrum(spec.values);
  return spec;
}

Spectrum general_eigenvalues(const Mat4& m, int max_iterations) {
  try {
    return qr_eigenvalues(m, max_iterations);
  } catch (const NoConvergence& e) {
    Spectrum spec = quartic_eigenvalues(m);
    spec.iterations = e.iterations();
    return spec;
  }
}

}  // namespace xsdyn
