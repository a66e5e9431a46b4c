//
// file: witnesses.hpp
//
// Explicit extremal instances and the zero-padding embedding.
//
#pragma once

#include <cmath>
#include <numbers>

#include "bohr/functional.hpp"

namespace bohr {

/// A: 1 on the diagonal, -2 above it; S = 2I; constant sequence = shift.
/// Tr(A) = n, Tr(S) = 2n, |alpha_m| = 2(n-1), critical radius n/(3n-2).
inline BohrInstance general_witness(std::size_t n) {
  if (n < 2) throw Error(ErrorCode::InvalidOrder, "general witness needs n >= 2, got " + std::to_string(n));
  ComplexMatrix a(n);
  for (std::size_t i = 0; i < n; ++i) {
    a(i, i) = 1.0;
    for (std::size_t j = i + 1; j < n; ++j) a(i, j) = -2.0;
  }
  return {std::move(a), ComplexMatrix::identity(n) * Complex{2.0}, SequenceSpec::constant(ComplexMatrix::shift(n)),
          HypothesisMode::theorem};
}

/// The 3x3 instance whose gap S - Re(A) is (1, sqrt2, 1)(1, sqrt2, 1)^T;
/// critical radius sqrt2 - 1.
inline BohrInstance three_by_three_witness() {
  const double r2 = std::numbers::sqrt2;
  auto a = ComplexMatrix::from_rows({{2.0, -2.0 * r2, -2.0}, {0.0, 2.0, -2.0 * r2}, {0.0, 0.0, 2.0}});
  return {std::move(a), ComplexMatrix::diagonal({3.0, 4.0, 3.0}), SequenceSpec::constant(ComplexMatrix::shift(3)),
          HypothesisMode::theorem};
}

struct RemarkParameters {
  double theta = 0.0;
  long k = 0;
};

/// theta: midpoint of ((1 - r) / 2r, 1); k: smallest integer above theta / (2(1 - theta)).
inline RemarkParameters remark_parameters(double r_target) {
  if (!(r_target > 1.0 / 3.0 && r_target < 1.0))
    throw Error(ErrorCode::RadiusNotAboveOneThird, "r_target must lie in (1/3, 1), got " + std::to_string(r_target));
  RemarkParameters p;
  p.theta = 0.5 * ((1.0 - r_target) / (2.0 * r_target) + 1.0);
  p.k = static_cast<long>(std::floor(p.theta / (2.0 * (1.0 - p.theta)))) + 1;
  return p;
}

/// Full 2x2 relaxed-mode instance that violates the inequality at r_target.
/// |alpha_m| = 2 theta, Tr(A) = 1, Tr(S) = 2, critical radius 1 / (1 + 2 theta).
inline BohrInstance remark_two_witness(double r_target) {
  const auto [theta, k] = remark_parameters(r_target);
  const double kd = static_cast<double>(k);
  const Complex i{0.0, 1.0};
  auto a = ComplexMatrix::from_rows({{0.5 + i * kd, 0.5}, {0.5, 0.5 - i * kd}});
  auto m = ComplexMatrix::from_rows({{-theta / (2.0 * kd), i * theta}, {i * theta, theta / (2.0 * kd)}});
  return {std::move(a), ComplexMatrix::identity(2), SequenceSpec::constant(std::move(m)), HypothesisMode::relaxed};
}

/// Pads every matrix of the instance with zero rows and columns up to order n_new.
inline BohrInstance embed(const BohrInstance& inst, std::size_t n_new) {
  std::vector<ComplexMatrix> padded;
  padded.reserve(inst.seq.matrices().size());
  for (const auto& m : inst.seq.matrices()) padded.push_back(zero_pad(m, n_new));
  SequenceSpec seq = inst.seq.kind() == SequenceSpec::Kind::constant ? SequenceSpec::constant(std::move(padded.front()))
                                                                     : SequenceSpec::finite_list(std::move(padded));
  return {zero_pad(inst.a, n_new), zero_pad(inst.s, n_new), std::move(seq), inst.mode};
}

}  // namespace bohr
