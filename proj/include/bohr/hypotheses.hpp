//
// file: hypotheses.hpp
//
// Hypothesis checks for an instance, reported per condition with a signed
// slack (positive = margin, negative = size of the violation).
//
// Theorem mode (upper-triangular model of M_n):
//   upper_triangular          A upper triangular
//   trace_nonnegative_real    Tr(A) real and >= 0
//   s_real_diagonal           S real diagonal
//   loewner_gap               Re(A) <= S
//   sequence_strictly_upper   every A_m strictly upper triangular
//   sequence_norm             every ||A_m|| <= 1
//
// Relaxed mode (arbitrary matrices):
//   trace_nonnegative_real, s_hermitian, loewner_gap,
//   sequence_trace_s          Tr(S A_m) = 0
//   sequence_trace_a          Tr(A A_m) = 0
//   sequence_norm
//
#pragma once

#include <algorithm>
#include <limits>
#include <string>
#include <vector>

#include "bohr/functional.hpp"

namespace bohr {

struct Condition {
  std::string name;
  bool pass = false;
  double slack = 0.0;
};

struct HypothesisReport {
  HypothesisMode mode = HypothesisMode::theorem;
  std::vector<Condition> conditions;
  bool overall = false;

  [[nodiscard]] const Condition* find(std::string_view name) const noexcept {
    for (const auto& c : conditions)
      if (c.name == name) return &c;
    return nullptr;
  }

  [[nodiscard]] std::vector<std::string> failing() const {
    std::vector<std::string> out;
    for (const auto& c : conditions)
      if (!c.pass) out.push_back(c.name);
    return out;
  }
};

namespace detail {

inline void add_condition(HypothesisReport& r, std::string name, double slack) {
  r.conditions.push_back({std::move(name), slack >= 0.0, slack});
}

inline double trace_condition_slack(const ComplexMatrix& a, double tol) {
  const Complex tr = trace(a);
  const double re_margin = tr.real() + tol;
  const double im_margin = tol * std::max(1.0, std::abs(tr)) - std::abs(tr.imag());
  return std::min(re_margin, im_margin);
}

inline double loewner_slack(const ComplexMatrix& a, const ComplexMatrix& s, double tol) {
  if (!is_hermitian(s, tol)) return -hermitian_defect(s);
  return loewner_gap(re_part(a), s, tol).slack(tol);
}

inline double sequence_norm_slack(const SequenceSpec& seq, double tol) {
  double worst = std::numeric_limits<double>::infinity();
  for (const auto& m : seq.matrices()) worst = std::min(worst, 1.0 + tol - operator_norm(m));
  return seq.matrices().empty() ? 1.0 + tol : worst;
}

// Worst margin of |Tr(X A_m)| <= tol * max(1, ||X||_F ||A_m||_F) over the sequence.
inline double sequence_trace_slack(const ComplexMatrix& x, const SequenceSpec& seq, double tol) {
  double worst = std::numeric_limits<double>::infinity();
  for (const auto& m : seq.matrices()) {
    const double scale = std::max(1.0, frobenius_norm(x) * frobenius_norm(m));
    worst = std::min(worst, tol * scale - std::abs(trace_of_product(x, m)));
  }
  return seq.matrices().empty() ? tol : worst;
}

inline void finalize(HypothesisReport& r) {
  r.overall = std::all_of(r.conditions.begin(), r.conditions.end(), [](const Condition& c) { return c.pass; });
}

}  // namespace detail

inline HypothesisReport check_theorem_hypotheses(const BohrInstance& inst, double tol = kDefaultTol) {
  HypothesisReport r;
  r.mode = HypothesisMode::theorem;

  detail::add_condition(r, "upper_triangular",
                        tol * std::max(1.0, max_abs(inst.a)) - lower_part_max(inst.a, false));
  detail::add_condition(r, "trace_nonnegative_real", detail::trace_condition_slack(inst.a, tol));

  double diag_defect = lower_part_max(inst.s, false);
  for (std::size_t i = 0; i < inst.s.order(); ++i) {
    for (std::size_t j = i + 1; j < inst.s.order(); ++j) diag_defect = std::max(diag_defect, std::abs(inst.s(i, j)));
    diag_defect = std::max(diag_defect, std::abs(inst.s(i, i).imag()));
  }
  detail::add_condition(r, "s_real_diagonal", tol * std::max(1.0, max_abs(inst.s)) - diag_defect);

  detail::add_condition(r, "loewner_gap", detail::loewner_slack(inst.a, inst.s, tol));

  double strict_worst = std::numeric_limits<double>::infinity();
  for (const auto& m : inst.seq.matrices())
    strict_worst = std::min(strict_worst, tol * std::max(1.0, max_abs(m)) - lower_part_max(m, true));
  detail::add_condition(r, "sequence_strictly_upper", inst.seq.matrices().empty() ? tol : strict_worst);

  detail::add_condition(r, "sequence_norm", detail::sequence_norm_slack(inst.seq, tol));
  detail::finalize(r);
  return r;
}

inline HypothesisReport check_relaxed_hypotheses(const BohrInstance& inst, double tol = kDefaultTol) {
  HypothesisReport r;
  r.mode = HypothesisMode::relaxed;
  detail::add_condition(r, "trace_nonnegative_real", detail::trace_condition_slack(inst.a, tol));
  detail::add_condition(r, "s_hermitian", tol * std::max(1.0, max_abs(inst.s)) - hermitian_defect(inst.s));
  detail::add_condition(r, "loewner_gap", detail::loewner_slack(inst.a, inst.s, tol));
  detail::add_condition(r, "sequence_trace_s", detail::sequence_trace_slack(inst.s, inst.seq, tol));
  detail::add_condition(r, "sequence_trace_a", detail::sequence_trace_slack(inst.a, inst.seq, tol));
  detail::add_condition(r, "sequence_norm", detail::sequence_norm_slack(inst.seq, tol));
  detail::finalize(r);
  return r;
}

/// Dispatches on the instance's own mode.
inline HypothesisReport check_hypotheses(const BohrInstance& inst, double tol = kDefaultTol) {
  return inst.mode == HypothesisMode::theorem ? check_theorem_hypotheses(inst, tol)
                                              : check_relaxed_hypotheses(inst, tol);
}

/// Tr(x a) = 0 for x upper and a strictly upper triangular.
inline bool orthogonality_check(const ComplexMatrix& x, const ComplexMatrix& a, double tol = kDefaultTol) {
  if (!is_upper(x, tol)) throw Error(ErrorCode::PreconditionViolated, "x is not upper triangular");
  if (!is_strictly_upper(a, tol)) throw Error(ErrorCode::PreconditionViolated, "a is not strictly upper triangular");
  return std::abs(trace_of_product(x, a)) <= tol * std::max(1.0, frobenius_norm(x) * frobenius_norm(a));
}

}  // namespace bohr
