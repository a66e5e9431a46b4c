//
// file: linalg.hpp
//
// Spectral quantities on dense complex matrices: Hermitian eigenvalues by
// cyclic Jacobi rotations, singular values, operator and trace norms,
// Loewner comparison and triangularity tests.
//
#pragma once

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include "bohr/matrix.hpp"

namespace bohr {

inline constexpr double kDefaultTol = 1e-10;

/// Real scalars in nonincreasing order.
struct Spectrum {
  std::vector<double> values;

  [[nodiscard]] std::size_t size() const noexcept { return values.size(); }
  [[nodiscard]] double max() const { return values.front(); }
  [[nodiscard]] double min() const { return values.back(); }
  double operator[](std::size_t i) const { return values[i]; }
};

struct HermitianEigen {
  Spectrum spectrum;
  ComplexMatrix vectors;  // column k pairs with spectrum[k]
};

struct JacobiOptions {
  int max_sweeps = 100;
  double relative_threshold = 1e-14;
};

/// (A + A*) / 2
inline ComplexMatrix re_part(const ComplexMatrix& a) {
  const std::size_t n = a.order();
  ComplexMatrix h(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) h(i, j) = 0.5 * (a(i, j) + std::conj(a(j, i)));
  return h;
}

inline double hermitian_defect(const ComplexMatrix& h) noexcept {
  double d = 0.0;
  for (std::size_t i = 0; i < h.order(); ++i)
    for (std::size_t j = i; j < h.order(); ++j) d = std::max(d, std::abs(h(i, j) - std::conj(h(j, i))));
  return d;
}

inline bool is_hermitian(const ComplexMatrix& h, double tol = kDefaultTol) noexcept {
  return hermitian_defect(h) <= tol * std::max(1.0, max_abs(h));
}

namespace detail {

inline void require_hermitian(const ComplexMatrix& h, double tol) {
  if (!is_hermitian(h, tol))
    throw Error(ErrorCode::NotHermitian,
                "max |H - H*| = " + std::to_string(hermitian_defect(h)) + " exceeds tolerance");
}

inline double off_diagonal_norm(const ComplexMatrix& h) noexcept {
  double s = 0.0;
  for (std::size_t i = 0; i < h.order(); ++i)
    for (std::size_t j = 0; j < h.order(); ++j)
      if (i != j) s += std::norm(h(i, j));
  return std::sqrt(s);
}

// Cyclic complex Jacobi. The input is symmetrised first so that rounding in
// the caller's matrix does not leak into the rotations.
inline HermitianEigen jacobi(const ComplexMatrix& input, bool want_vectors, const JacobiOptions& opt) {
  const std::size_t n = input.order();
  ComplexMatrix h = re_part(input);
  for (std::size_t i = 0; i < n; ++i) h(i, i) = h(i, i).real();
  ComplexMatrix v = want_vectors ? ComplexMatrix::identity(n) : ComplexMatrix{};

  const double threshold = opt.relative_threshold * frobenius_norm(h);
  for (int sweep = 0; sweep < opt.max_sweeps; ++sweep) {
    if (off_diagonal_norm(h) <= threshold) break;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const Complex hpq = h(p, q);
        const double mag = std::abs(hpq);
        if (mag == 0.0) continue;
        const Complex phase = hpq / mag;  // e^{i phi}
        const double app = h(p, p).real();
        const double aqq = h(q, q).real();
        const double theta = (aqq - app) / (2.0 * mag);
        const double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        const Complex phase_conj = std::conj(phase);
        // H <- H J with J_pp = c, J_pq = s, J_qp = -s e^{-i phi}, J_qq = c e^{-i phi}
        for (std::size_t k = 0; k < n; ++k) {
          const Complex hkp = h(k, p);
          const Complex hkq = h(k, q);
          h(k, p) = c * hkp - s * phase_conj * hkq;
          h(k, q) = s * hkp + c * phase_conj * hkq;
        }
        // H <- J* H
        for (std::size_t k = 0; k < n; ++k) {
          const Complex hpk = h(p, k);
          const Complex hqk = h(q, k);
          h(p, k) = c * hpk - s * phase * hqk;
          h(q, k) = s * hpk + c * phase * hqk;
        }
        h(p, q) = 0.0;
        h(q, p) = 0.0;
        h(p, p) = h(p, p).real();
        h(q, q) = h(q, q).real();
        if (want_vectors) {
          for (std::size_t k = 0; k < n; ++k) {
            const Complex vkp = v(k, p);
            const Complex vkq = v(k, q);
            v(k, p) = c * vkp - s * phase_conj * vkq;
            v(k, q) = s * vkp + c * phase_conj * vkq;
          }
        }
      }
    }
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return h(a, a).real() > h(b, b).real(); });

  HermitianEigen out;
  out.spectrum.values.reserve(n);
  for (std::size_t k : order) out.spectrum.values.push_back(h(k, k).real());
  if (want_vectors) {
    out.vectors = ComplexMatrix(n);
    for (std::size_t col = 0; col < n; ++col)
      for (std::size_t k = 0; k < n; ++k) out.vectors(k, col) = v(k, order[col]);
  }
  return out;
}

}  // namespace detail

inline HermitianEigen hermitian_eigen(const ComplexMatrix& h, double tol = kDefaultTol,
                                      const JacobiOptions& opt = {}) {
  detail::require_hermitian(h, tol);
  return detail::jacobi(h, true, opt);
}

inline Spectrum hermitian_eigenvalues(const ComplexMatrix& h, double tol = kDefaultTol,
                                      const JacobiOptions& opt = {}) {
  detail::require_hermitian(h, tol);
  return detail::jacobi(h, false, opt).spectrum;
}

/// Singular values, nonincreasing, from the Hermitian dilation [[0, A], [A*, 0]]
/// whose eigenvalues are the +/- singular values. Avoids squaring small ones.
inline Spectrum singular_values(const ComplexMatrix& a) {
  const std::size_t n = a.order();
  ComplexMatrix dilation(2 * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      dilation(i, n + j) = a(i, j);
      dilation(n + j, i) = std::conj(a(i, j));
    }
  Spectrum eig = detail::jacobi(dilation, false, {}).spectrum;
  Spectrum out;
  out.values.assign(eig.values.begin(), eig.values.begin() + static_cast<std::ptrdiff_t>(n));
  for (auto& s : out.values) s = std::max(s, 0.0);
  return out;
}

/// Largest singular value, sqrt(lambda_max(A* A)).
inline double operator_norm(const ComplexMatrix& a) {
  if (max_abs(a) == 0.0) return 0.0;
  const Spectrum eig = detail::jacobi(adjoint(a) * a, false, {}).spectrum;
  return std::sqrt(std::max(eig.max(), 0.0));
}

/// Sum of singular values (Schatten-1 norm).
inline double trace_norm(const ComplexMatrix& a) {
  if (max_abs(a) == 0.0) return 0.0;
  const Spectrum s = singular_values(a);
  return std::accumulate(s.values.begin(), s.values.end(), 0.0);
}

/// Smallest eigenvalue of Y - X together with the scale used by the PSD slack.
struct LoewnerGap {
  double min_eigenvalue = 0.0;
  double scale = 1.0;  // max(1, ||Y - X||)

  /// Signed margin: >= 0 iff the comparison holds at the given tolerance.
  [[nodiscard]] double slack(double tol) const noexcept { return min_eigenvalue + tol * scale; }
};

inline LoewnerGap loewner_gap(const ComplexMatrix& x, const ComplexMatrix& y, double tol = kDefaultTol) {
  detail::require_hermitian(x, tol);
  detail::require_hermitian(y, tol);
  const ComplexMatrix gap = y - x;
  const Spectrum eig = detail::jacobi(gap, false, {}).spectrum;
  const double norm = std::max(std::abs(eig.max()), std::abs(eig.min()));
  return {eig.min(), std::max(1.0, norm)};
}

/// X <= Y in the Loewner order, with one-sided relative slack.
inline bool loewner_leq(const ComplexMatrix& x, const ComplexMatrix& y, double tol = kDefaultTol) {
  return loewner_gap(x, y, tol).slack(tol) >= 0.0;
}

/// Largest modulus strictly below the diagonal, or on and below it when include_diagonal is set.
inline double lower_part_max(const ComplexMatrix& a, bool include_diagonal) noexcept {
  double m = 0.0;
  for (std::size_t i = 0; i < a.order(); ++i)
    for (std::size_t j = 0; j < (include_diagonal ? i + 1 : i); ++j) m = std::max(m, std::abs(a(i, j)));
  return m;
}

inline bool is_upper(const ComplexMatrix& a, double tol = kDefaultTol) noexcept {
  return lower_part_max(a, false) <= tol * std::max(1.0, max_abs(a));
}

inline bool is_strictly_upper(const ComplexMatrix& a, double tol = kDefaultTol) noexcept {
  return lower_part_max(a, true) <= tol * std::max(1.0, max_abs(a));
}

}  // namespace bohr
