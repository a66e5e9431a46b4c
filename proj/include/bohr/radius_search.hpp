//
// file: radius_search.hpp
//
// Extremal radius estimation for the upper-triangular model of M_n.
//
// Every theorem-mode instance is determined (for the purpose of the Bohr
// functional) by its gap P = S - Re(A) >= 0 and the sequence matrix M:
// with A_ii = S_ii - P_ii and A_ij = -2 P_ij (i < j), the budget slack is
// D = Tr(S) - Tr(A) = Tr(P) and alpha = Tr(A M*) = -2 sum_{i<j} P_ij conj(M_ij),
// so the critical radius of a constant sequence is D / (D + |alpha|).
// Adding c I to S shifts A's diagonal by the same amount and changes
// neither D nor alpha; the search therefore fixes c = 0.
//
// Parameter vector layout for order n (length n^2 + n(n-1)):
//   L, lower triangle row by row: diagonal entries take one real,
//      off-diagonal entries take (re, im);                           n^2 reals
//   M, strictly upper triangle row by row, (re, im) per entry;      n(n-1) reals
// P = L L*, M is rescaled by 1 / max(1, ||M||).
//
#pragma once

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <numbers>
#include <random>
#include <thread>
#include <vector>

#include "bohr/functional.hpp"
#include "bohr/hypotheses.hpp"
#include "bohr/nelder_mead.hpp"

namespace bohr {

inline std::size_t parameter_length(std::size_t n) noexcept { return n * n + n * (n - 1); }

struct GapAndSequence {
  ComplexMatrix gap;       // P, PSD by construction
  ComplexMatrix sequence;  // M, strictly upper, ||M|| <= 1
};

namespace detail {

inline void require_length(std::size_t n, std::size_t len) {
  if (n < 1) throw Error(ErrorCode::InvalidOrder, "order must be positive");
  if (len != parameter_length(n))
    throw Error(ErrorCode::BadLength,
                "expected " + std::to_string(parameter_length(n)) + " parameters, got " + std::to_string(len));
}

}  // namespace detail

inline GapAndSequence parameterize(std::size_t n, std::span<const double> v) {
  detail::require_length(n, v.size());
  std::size_t k = 0;
  ComplexMatrix l(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j <= i; ++j) {
      if (i == j) {
        l(i, j) = v[k++];
      } else {
        l(i, j) = Complex{v[k], v[k + 1]};
        k += 2;
      }
    }
  ComplexMatrix m(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      m(i, j) = Complex{v[k], v[k + 1]};
      k += 2;
    }
  const double norm = operator_norm(m);
  if (norm > 1.0) m *= Complex{1.0 / norm};
  return {l * adjoint(l), std::move(m)};
}

/// D / (D + |alpha|) for the instance induced by (P, M); 1 when alpha = 0.
inline double radius_from_gap(const ComplexMatrix& p, const ComplexMatrix& m) {
  p.require_same_order(m);
  double d = 0.0;
  Complex alpha{};
  for (std::size_t i = 0; i < p.order(); ++i) {
    d += p(i, i).real();
    for (std::size_t j = i + 1; j < p.order(); ++j) alpha += -2.0 * p(i, j) * std::conj(m(i, j));
  }
  const double mag = std::abs(alpha);
  if (mag == 0.0) return 1.0;
  return d / (d + mag);
}

inline double objective(std::size_t n, std::span<const double> v) {
  const auto [p, m] = parameterize(n, v);
  return radius_from_gap(p, m);
}

/// Builds the theorem-mode instance with S = diag(P) + shift I, A_ii = S_ii - P_ii,
/// A_ij = -2 P_ij above the diagonal and the constant sequence M.
inline BohrInstance materialize(const ComplexMatrix& p, const ComplexMatrix& m, double shift = 0.0,
                                double tol = kDefaultTol) {
  p.require_same_order(m);
  const std::size_t n = p.order();
  if (!is_hermitian(p, tol)) throw Error(ErrorCode::NotPSD, "gap matrix is not Hermitian");
  const LoewnerGap g = loewner_gap(ComplexMatrix(n), p, tol);
  if (g.slack(tol) < 0.0)
    throw Error(ErrorCode::NotPSD, "gap matrix has eigenvalue " + std::to_string(g.min_eigenvalue));
  if (!is_strictly_upper(m, tol)) throw Error(ErrorCode::NotContraction, "sequence matrix is not strictly upper");
  if (operator_norm(m) > 1.0 + tol) throw Error(ErrorCode::NotContraction, "sequence matrix has norm above 1");

  ComplexMatrix s(n);
  ComplexMatrix a(n);
  for (std::size_t i = 0; i < n; ++i) {
    s(i, i) = p(i, i).real() + shift;
    a(i, i) = s(i, i) - p(i, i).real();
    for (std::size_t j = i + 1; j < n; ++j) a(i, j) = -2.0 * p(i, j);
  }
  return {std::move(a), std::move(s), SequenceSpec::constant(m), HypothesisMode::theorem};
}

struct SearchConfig {
  std::size_t n = 2;
  std::size_t restarts = 16;
  std::size_t max_iters = 2000;
  std::uint64_t seed = 0;
  double simplex_tol = 1e-9;
  double initial_edge = 0.5;
  unsigned threads = 0;  // 0: hardware concurrency

  void validate() const {
    if (n < 2) throw Error(ErrorCode::InvalidOrder, "search needs n >= 2");
    if (restarts < 1) throw Error(ErrorCode::InvalidConfig, "restarts must be >= 1");
    if (max_iters < 1) throw Error(ErrorCode::InvalidConfig, "max_iters must be >= 1");
    if (!(simplex_tol > 0.0)) throw Error(ErrorCode::InvalidConfig, "simplex_tol must be positive");
  }
};

struct RadiusEstimate {
  double r_star = 1.0;
  BohrInstance instance;
  std::vector<double> best_parameters;
  std::size_t evaluations = 0;
  std::vector<double> per_restart_best;
};

/// Called with every objective value the search evaluates; invoked
/// concurrently from worker threads when threads > 1.
using EvaluationObserver = std::function<void(double)>;

/// SplitMix64 finaliser; decorrelates (seed, restart) pairs.
inline std::uint64_t stream_seed(std::uint64_t seed, std::uint64_t stream) noexcept {
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

inline std::vector<double> random_start(std::size_t n, std::uint64_t seed, std::size_t restart) {
  std::mt19937_64 gen(stream_seed(seed, restart));
  std::normal_distribution<double> normal(0.0, 1.0);
  std::vector<double> v(parameter_length(n));
  for (auto& x : v) x = normal(gen);
  return v;
}

/// Multistart Nelder-Mead over the (P, M) parameterisation. Restart i starts
/// from random_start(n, seed, i); the result does not depend on scheduling.
inline RadiusEstimate search(const SearchConfig& cfg, const EvaluationObserver& observer = {}) {
  cfg.validate();
  const std::size_t n = cfg.n;
  NelderMeadOptions nm;
  nm.initial_edge = cfg.initial_edge;
  nm.simplex_tol = cfg.simplex_tol;
  nm.max_iters = cfg.max_iters;

  std::vector<NelderMeadResult> results(cfg.restarts);
  auto run = [&](std::size_t i) {
    auto f = [&](const std::vector<double>& v) {
      const double value = objective(n, v);
      if (observer) observer(value);
      return value;
    };
    results[i] = nelder_mead(f, random_start(n, cfg.seed, i), nm);
  };

  unsigned threads = cfg.threads == 0 ? std::max(1u, std::thread::hardware_concurrency()) : cfg.threads;
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, cfg.restarts));
  if (threads <= 1) {
    for (std::size_t i = 0; i < cfg.restarts; ++i) run(i);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t)
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < cfg.restarts; i = next++) run(i);
      });
  }

  std::size_t best = 0;
  std::size_t evaluations = 0;
  std::vector<double> per_restart(cfg.restarts);
  for (std::size_t i = 0; i < cfg.restarts; ++i) {
    per_restart[i] = results[i].value;
    evaluations += results[i].evaluations;
    if (results[i].value < results[best].value) best = i;
  }
  auto [p, m] = parameterize(n, results[best].x);
  return {results[best].value, materialize(p, m), results[best].x, evaluations, std::move(per_restart)};
}

/// Grid minimum of (a^2 + b^2 + 1) / (a u + a b sqrt((1-u^2)(1-w^2)) + b w)
/// over a, b log-spaced in [1e-3, 10] and u, w uniform in [0, 1].
inline double calculus_claim_oracle(std::size_t grid) {
  if (grid < 10) throw Error(ErrorCode::InvalidConfig, "grid must be at least 10");
  constexpr double lo = 1e-3;
  constexpr double hi = 10.0;
  std::vector<double> ab(grid), uw(grid);
  for (std::size_t i = 0; i < grid; ++i) {
    const double t = static_cast<double>(i) / static_cast<double>(grid - 1);
    ab[i] = lo * std::pow(hi / lo, t);
    uw[i] = t;
  }
  ab.back() = hi;
  std::vector<double> root(grid * grid);
  for (std::size_t i = 0; i < grid; ++i)
    for (std::size_t j = 0; j < grid; ++j)
      root[i * grid + j] = std::sqrt(std::max(0.0, (1.0 - uw[i] * uw[i]) * (1.0 - uw[j] * uw[j])));

  double best = std::numeric_limits<double>::infinity();
  for (double a : ab)
    for (double b : ab) {
      const double num = a * a + b * b + 1.0;
      const double ab_prod = a * b;
      double max_den = 0.0;
      for (std::size_t i = 0; i < grid; ++i) {
        const double au = a * uw[i];
        const double* row = &root[i * grid];
        for (std::size_t j = 0; j < grid; ++j) max_den = std::max(max_den, au + ab_prod * row[j] + b * uw[j]);
      }
      best = std::min(best, num / max_den);
    }
  return best;
}

}  // namespace bohr
