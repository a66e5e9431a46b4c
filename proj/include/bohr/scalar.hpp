//
// file: scalar.hpp
//
// Classical Bohr inequality for power series f(z) = sum a_k z^k.
//
#pragma once

#include <cmath>
#include <numbers>
#include <optional>
#include <vector>

#include "bohr/functional.hpp"

namespace bohr {

/// Coefficients a_0..a_K, optionally followed by a geometric tail
/// a_{K+1+j} = c rho^j with |rho| < 1.
struct CoeffSeries {
  struct Geometric {
    Complex c;
    Complex rho;
  };

  std::vector<Complex> coeffs;
  std::optional<Geometric> tail;

  static CoeffSeries make(std::vector<Complex> coeffs, std::optional<Geometric> tail = std::nullopt) {
    CoeffSeries s{std::move(coeffs), tail};
    s.validate();
    return s;
  }

  void validate() const {
    for (const auto& a : coeffs)
      if (!std::isfinite(a.real()) || !std::isfinite(a.imag()))
        throw Error(ErrorCode::InvalidSeries, "non-finite coefficient");
    if (tail && !(std::abs(tail->rho) < 1.0))
      throw Error(ErrorCode::InvalidSeries, "geometric tail needs |rho| < 1");
  }
};

/// f_a(z) = (a - z) / (1 - a z) = a - (1 - a^2) sum_{k>=1} a^{k-1} z^k, 0 <= a < 1.
inline CoeffSeries mobius_series(double a) {
  if (!(a >= 0.0 && a < 1.0)) throw Error(ErrorCode::InvalidSeries, "Mobius parameter must lie in [0, 1)");
  return CoeffSeries::make({Complex{a}}, CoeffSeries::Geometric{Complex{-(1.0 - a * a)}, Complex{a}});
}

inline double scalar_bohr_sum(const CoeffSeries& s, double r) {
  if (!(r >= 0.0 && r < 1.0)) throw Error(ErrorCode::RadiusOutOfRange, "r = " + std::to_string(r));
  double sum = 0.0;
  double power = 1.0;
  for (const auto& a : s.coeffs) {
    sum += std::abs(a) * power;
    power *= r;
  }
  if (s.tail) {
    const double q = std::abs(s.tail->rho) * r;
    if (!(q < 1.0)) throw Error(ErrorCode::RadiusOutOfRange, "|rho| r must be below 1");
    sum += std::abs(s.tail->c) * power / (1.0 - q);
  }
  return sum;
}

/// f(z) on |z| = 1; the tail is summed in closed form c z^{K+1} / (1 - rho z).
inline Complex evaluate_on_circle(const CoeffSeries& s, double angle) {
  const Complex z = std::polar(1.0, angle);
  Complex acc{};
  for (auto it = s.coeffs.rbegin(); it != s.coeffs.rend(); ++it) acc = acc * z + *it;
  if (s.tail) {
    const Complex zk = std::pow(z, static_cast<double>(s.coeffs.size()));
    acc += s.tail->c * zk / (1.0 - s.tail->rho * z);
  }
  return acc;
}

/// max |f| over equally spaced points of the unit circle; a lower bound on ||f||_inf.
inline double sup_norm_estimate(const CoeffSeries& s, std::size_t gridpoints = 4096) {
  if (gridpoints < 8) throw Error(ErrorCode::InvalidConfig, "gridpoints must be at least 8");
  double best = 0.0;
  for (std::size_t j = 0; j < gridpoints; ++j) {
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(gridpoints);
    best = std::max(best, std::abs(evaluate_on_circle(s, angle)));
  }
  return best;
}

struct ClassicalCheck {
  bool holds = false;
  double lhs = 0.0;
  double rhs = 0.0;
};

inline ClassicalCheck classical_verify(const CoeffSeries& s, double r, std::size_t gridpoints = 4096,
                                       double tol = kDefaultTol) {
  ClassicalCheck c;
  c.lhs = scalar_bohr_sum(s, r);
  c.rhs = sup_norm_estimate(s, gridpoints);
  c.holds = c.lhs <= c.rhs + tol;
  return c;
}

/// sup{ r : scalar_bohr_sum(s, r) <= budget } by bisection.
inline double scalar_critical_radius(const CoeffSeries& s, double budget, double tol = kRadiusTol) {
  double hi = 1.0 - 1e-12;
  if (s.tail) hi = std::min(hi, (1.0 - 1e-12) / std::max(std::abs(s.tail->rho), 1e-300));
  if (scalar_bohr_sum(s, 0.0) > budget)
    throw Error(ErrorCode::BudgetBelowAlpha0, "budget below |a_0|");
  if (scalar_bohr_sum(s, hi) <= budget) return 1.0;
  double lo = 0.0;
  for (int it = 0; it < 200 && hi - lo > tol; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (scalar_bohr_sum(s, mid) <= budget)
      lo = mid;
    else
      hi = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace bohr
