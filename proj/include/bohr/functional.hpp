//
// file: functional.hpp
//
// Coefficient sequence alpha_m = Tr(A A_m*), the Bohr functional
// sum |alpha_m| r^m and the critical radius at which an instance exhausts
// its budget Tr(S).
//
#pragma once

#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

#include "bohr/linalg.hpp"

namespace bohr {

enum class HypothesisMode { theorem, relaxed };

inline constexpr std::string_view to_string(HypothesisMode m) noexcept {
  return m == HypothesisMode::theorem ? "theorem" : "relaxed";
}

/// Sequence A_1, A_2, ... of matrices paired against A.
/// A constant sequence repeats one matrix forever; a finite list is zero beyond its end.
class SequenceSpec {
 public:
  enum class Kind { constant, finite_list };

  static SequenceSpec constant(ComplexMatrix m) { return SequenceSpec(Kind::constant, {std::move(m)}); }

  static SequenceSpec finite_list(std::vector<ComplexMatrix> ms) {
    return SequenceSpec(Kind::finite_list, std::move(ms));
  }

  [[nodiscard]] Kind kind() const noexcept { return kind_; }
  [[nodiscard]] const std::vector<ComplexMatrix>& matrices() const noexcept { return matrices_; }

  friend bool operator==(const SequenceSpec&, const SequenceSpec&) = default;

 private:
  SequenceSpec(Kind k, std::vector<ComplexMatrix> ms) : kind_(k), matrices_(std::move(ms)) {
    if (kind_ == Kind::constant && matrices_.size() != 1)
      throw Error(ErrorCode::InvalidSeries, "constant sequence needs exactly one matrix");
    for (std::size_t i = 1; i < matrices_.size(); ++i) matrices_[0].require_same_order(matrices_[i]);
  }

  Kind kind_ = Kind::constant;
  std::vector<ComplexMatrix> matrices_;
};

/// One experiment: A, the dominating self-adjoint S, the sequence and the
/// hypothesis set it is meant to satisfy.
struct BohrInstance {
  ComplexMatrix a;
  ComplexMatrix s;
  SequenceSpec seq = SequenceSpec::finite_list({});
  HypothesisMode mode = HypothesisMode::theorem;

  BohrInstance(ComplexMatrix a_, ComplexMatrix s_, SequenceSpec seq_, HypothesisMode mode_)
      : a(std::move(a_)), s(std::move(s_)), seq(std::move(seq_)), mode(mode_) {
    a.require_same_order(s);
    for (const auto& m : seq.matrices()) a.require_same_order(m);
  }

  [[nodiscard]] std::size_t order() const noexcept { return a.order(); }

  friend bool operator==(const BohrInstance&, const BohrInstance&) = default;
};

/// alpha_0 together with |alpha_m| for m >= 1.
struct AlphaSeries {
  enum class Tail { zero, constant };

  double alpha0 = 0.0;
  std::vector<double> magnitudes;  // |alpha_1|, |alpha_2|, ...
  Tail tail = Tail::zero;
  double tail_value = 0.0;         // constant tail magnitude
  std::size_t tail_start = 1;      // first index carrying the constant tail

  static AlphaSeries make(double alpha0, std::vector<double> magnitudes, Tail tail = Tail::zero,
                          double tail_value = 0.0, std::size_t tail_start = 1) {
    AlphaSeries s{alpha0, std::move(magnitudes), tail, tail_value, tail_start};
    s.validate();
    return s;
  }

  static AlphaSeries constant_tail(double alpha0, double c) {
    return make(alpha0, {}, Tail::constant, c, 1);
  }

  void validate() const {
    if (!(alpha0 >= 0.0) || !std::isfinite(alpha0))
      throw Error(ErrorCode::NegativeTrace, "alpha0 must be finite and nonnegative");
    for (double m : magnitudes)
      if (!(m >= 0.0) || !std::isfinite(m))
        throw Error(ErrorCode::InvalidSeries, "magnitudes must be finite and nonnegative");
    if (tail == Tail::constant) {
      if (!(tail_value >= 0.0) || !std::isfinite(tail_value))
        throw Error(ErrorCode::InvalidSeries, "constant tail must be finite and nonnegative");
      if (tail_start < magnitudes.size() + 1)
        throw Error(ErrorCode::InvalidSeries, "constant tail overlaps explicit magnitudes");
    }
  }

  [[nodiscard]] bool has_nonzero_tail() const noexcept {
    if (tail == Tail::constant && tail_value > 0.0) return true;
    for (double m : magnitudes)
      if (m > 0.0) return true;
    return false;
  }

  friend bool operator==(const AlphaSeries&, const AlphaSeries&) = default;
};

/// alpha_0 = Re Tr(A), |alpha_m| = |Tr(A A_m*)|.
inline AlphaSeries alpha_series(const BohrInstance& inst, double tol = kDefaultTol) {
  const Complex tr = trace(inst.a);
  if (std::abs(tr.imag()) > tol * std::max(1.0, std::abs(tr)))
    throw Error(ErrorCode::NonrealTrace, "Im Tr(A) = " + std::to_string(tr.imag()));
  if (tr.real() < -tol) throw Error(ErrorCode::NegativeTrace, "Re Tr(A) = " + std::to_string(tr.real()));

  AlphaSeries out;
  out.alpha0 = std::max(tr.real(), 0.0);
  const auto& ms = inst.seq.matrices();
  if (inst.seq.kind() == SequenceSpec::Kind::constant) {
    out.tail = AlphaSeries::Tail::constant;
    out.tail_value = std::abs(trace_of_product_adjoint(inst.a, ms.front()));
    out.tail_start = 1;
  } else {
    out.magnitudes.reserve(ms.size());
    for (const auto& m : ms) out.magnitudes.push_back(std::abs(trace_of_product_adjoint(inst.a, m)));
  }
  return out;
}

/// alpha_0 + sum_{m>=1} |alpha_m| r^m, with the constant tail in closed form.
inline double bohr_sum(const AlphaSeries& series, double r) {
  if (!(r >= 0.0 && r < 1.0)) throw Error(ErrorCode::RadiusOutOfRange, "r = " + std::to_string(r));
  double sum = series.alpha0;
  double power = 1.0;
  for (double m : series.magnitudes) {
    power *= r;
    sum += m * power;
  }
  if (series.tail == AlphaSeries::Tail::constant && series.tail_value != 0.0)
    sum += series.tail_value * std::pow(r, static_cast<double>(series.tail_start)) / (1.0 - r);
  return sum;
}

struct BisectionOptions {
  double upper = 1.0 - 1e-12;
  int max_iterations = 200;
};

inline constexpr double kRadiusTol = 1e-12;

/// sup{ r in [0, 1) : bohr_sum(series, r) <= budget }. Returns exactly 1 when
/// the sum never exceeds the budget below the bisection ceiling.
inline double critical_radius(const AlphaSeries& series, double budget, double tol = kRadiusTol,
                              const BisectionOptions& opt = {}) {
  if (!(tol > 0.0)) throw Error(ErrorCode::PreconditionViolated, "tolerance must be positive");
  if (budget < series.alpha0)
    throw Error(ErrorCode::BudgetBelowAlpha0,
                "budget " + std::to_string(budget) + " < alpha0 " + std::to_string(series.alpha0));
  if (bohr_sum(series, opt.upper) <= budget) return 1.0;
  double lo = 0.0;
  double hi = opt.upper;
  for (int it = 0; it < opt.max_iterations && hi - lo > tol; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (bohr_sum(series, mid) <= budget)
      lo = mid;
    else
      hi = mid;
  }
  return 0.5 * (lo + hi);
}

struct InequalityCheck {
  bool holds = false;
  double lhs = 0.0;
  double rhs = 0.0;
  double slack = 0.0;  // rhs - lhs
};

inline InequalityCheck check_inequality(const AlphaSeries& series, double budget, double r,
                                        double tol = kDefaultTol) {
  InequalityCheck c;
  c.lhs = bohr_sum(series, r);
  c.rhs = budget;
  c.slack = c.rhs - c.lhs;
  c.holds = c.lhs <= c.rhs + tol;
  return c;
}

/// Evaluates sum |alpha_m| r^m <= Re Tr(S) for an instance.
inline InequalityCheck check_inequality(const BohrInstance& inst, double r, double tol = kDefaultTol) {
  if (!(r >= 0.0 && r < 1.0)) throw Error(ErrorCode::RadiusOutOfRange, "r = " + std::to_string(r));
  return check_inequality(alpha_series(inst, tol), trace(inst.s).real(), r, tol);
}

/// Critical radius of an instance against its own budget Re Tr(S).
inline double critical_radius(const BohrInstance& inst, double tol = kRadiusTol) {
  return critical_radius(alpha_series(inst), trace(inst.s).real(), tol);
}

}  // namespace bohr
