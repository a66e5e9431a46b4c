//
// file: matrix.hpp
//
// Dense square complex matrix. Row-major storage, value semantics.
//
#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "bohr/error.hpp"

namespace bohr {

using Complex = std::complex<double>;

class ComplexMatrix {
 public:
  ComplexMatrix() = default;

  /// Zero matrix of order n.
  explicit ComplexMatrix(std::size_t n) : n_(n), data_(n * n) {
    if (n == 0) throw Error(ErrorCode::InvalidMatrix, "order must be at least 1");
  }

  /// Builds from rows; rejects ragged, non-square or non-finite input.
  static ComplexMatrix from_rows(const std::vector<std::vector<Complex>>& rows) {
    const std::size_t n = rows.size();
    if (n == 0) throw Error(ErrorCode::InvalidMatrix, "empty matrix");
    ComplexMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) {
      if (rows[i].size() != n)
        throw Error(ErrorCode::InvalidMatrix,
                    "row " + std::to_string(i) + " has " + std::to_string(rows[i].size()) +
                        " entries, expected " + std::to_string(n));
      for (std::size_t j = 0; j < n; ++j) m(i, j) = rows[i][j];
    }
    m.require_finite();
    return m;
  }

  static ComplexMatrix from_rows(std::initializer_list<std::initializer_list<Complex>> rows) {
    std::vector<std::vector<Complex>> v;
    v.reserve(rows.size());
    for (const auto& r : rows) v.emplace_back(r);
    return from_rows(v);
  }

  static ComplexMatrix identity(std::size_t n) {
    ComplexMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
  }

  static ComplexMatrix diagonal(std::span<const double> d) {
    ComplexMatrix m(d.size());
    for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
    return m;
  }

  static ComplexMatrix diagonal(std::initializer_list<double> d) {
    return diagonal(std::span<const double>(d.begin(), d.size()));
  }

  /// Ones on the first superdiagonal: the unilateral shift truncated to order n.
  static ComplexMatrix shift(std::size_t n) {
    ComplexMatrix m(n);
    for (std::size_t i = 0; i + 1 < n; ++i) m(i, i + 1) = 1.0;
    return m;
  }

  [[nodiscard]] std::size_t order() const noexcept { return n_; }
  [[nodiscard]] bool empty() const noexcept { return n_ == 0; }

  Complex& operator()(std::size_t i, std::size_t j) noexcept { return data_[i * n_ + j]; }
  const Complex& operator()(std::size_t i, std::size_t j) const noexcept { return data_[i * n_ + j]; }

  [[nodiscard]] std::span<const Complex> entries() const noexcept { return data_; }

  [[nodiscard]] bool all_finite() const noexcept {
    return std::all_of(data_.begin(), data_.end(), [](const Complex& z) {
      return std::isfinite(z.real()) && std::isfinite(z.imag());
    });
  }

  void require_finite() const {
    if (!all_finite()) throw Error(ErrorCode::InvalidMatrix, "matrix has non-finite entries");
  }

  ComplexMatrix& operator+=(const ComplexMatrix& o) {
    require_same_order(o);
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
    return *this;
  }

  ComplexMatrix& operator-=(const ComplexMatrix& o) {
    require_same_order(o);
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
    return *this;
  }

  ComplexMatrix& operator*=(Complex s) noexcept {
    for (auto& z : data_) z *= s;
    return *this;
  }

  friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
  friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
  friend ComplexMatrix operator*(ComplexMatrix a, Complex s) { return a *= s; }
  friend ComplexMatrix operator*(Complex s, ComplexMatrix a) { return a *= s; }

  friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
    a.require_same_order(b);
    const std::size_t n = a.n_;
    ComplexMatrix c(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < n; ++k) {
        const Complex aik = a(i, k);
        if (aik == Complex{}) continue;
        for (std::size_t j = 0; j < n; ++j) c(i, j) += aik * b(k, j);
      }
    return c;
  }

  friend bool operator==(const ComplexMatrix&, const ComplexMatrix&) = default;

  void require_same_order(const ComplexMatrix& o) const {
    if (o.n_ != n_)
      throw Error(ErrorCode::DimensionMismatch,
                  "orders " + std::to_string(n_) + " and " + std::to_string(o.n_));
  }

 private:
  std::size_t n_ = 0;
  std::vector<Complex> data_;
};

inline ComplexMatrix adjoint(const ComplexMatrix& a) {
  const std::size_t n = a.order();
  ComplexMatrix h(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) h(j, i) = std::conj(a(i, j));
  return h;
}

inline Complex trace(const ComplexMatrix& a) noexcept {
  Complex t{};
  for (std::size_t i = 0; i < a.order(); ++i) t += a(i, i);
  return t;
}

/// Tr(A B) without forming the product.
inline Complex trace_of_product(const ComplexMatrix& a, const ComplexMatrix& b) {
  a.require_same_order(b);
  Complex t{};
  for (std::size_t i = 0; i < a.order(); ++i)
    for (std::size_t j = 0; j < a.order(); ++j) t += a(i, j) * b(j, i);
  return t;
}

/// Tr(A B*) = sum of A_ij conj(B_ij).
inline Complex trace_of_product_adjoint(const ComplexMatrix& a, const ComplexMatrix& b) {
  a.require_same_order(b);
  Complex t{};
  for (std::size_t i = 0; i < a.order(); ++i)
    for (std::size_t j = 0; j < a.order(); ++j) t += a(i, j) * std::conj(b(i, j));
  return t;
}

inline double max_abs(const ComplexMatrix& a) noexcept {
  double m = 0.0;
  for (const auto& z : a.entries()) m = std::max(m, std::abs(z));
  return m;
}

inline double frobenius_norm(const ComplexMatrix& a) noexcept {
  double s = 0.0;
  for (const auto& z : a.entries()) s += std::norm(z);
  return std::sqrt(s);
}

/// Zero-pads to order n_new; the original occupies the leading block.
inline ComplexMatrix zero_pad(const ComplexMatrix& a, std::size_t n_new) {
  if (n_new < a.order())
    throw Error(ErrorCode::ShrinkNotAllowed,
                "cannot pad order " + std::to_string(a.order()) + " down to " + std::to_string(n_new));
  ComplexMatrix b(n_new);
  for (std::size_t i = 0; i < a.order(); ++i)
    for (std::size_t j = 0; j < a.order(); ++j) b(i, j) = a(i, j);
  return b;
}

}  // namespace bohr
