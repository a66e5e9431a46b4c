//
// file: nelder_mead.hpp
//
// Derivative-free Nelder-Mead simplex minimiser.
//
#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numeric>
#include <vector>

namespace bohr {

struct NelderMeadOptions {
  double reflection = 1.0;
  double expansion = 2.0;
  double contraction = 0.5;
  double shrink = 0.5;
  double initial_edge = 0.5;
  double simplex_tol = 1e-9;   // stop when max ||x_i - x_best||_inf falls below
  std::size_t max_iters = 2000;
};

struct NelderMeadResult {
  std::vector<double> x;
  double value = 0.0;
  std::size_t iterations = 0;
  std::size_t evaluations = 0;
  bool converged = false;  // simplex diameter criterion met
};

/// Minimises f: const std::vector<double>& -> double starting from a simplex
/// with vertices x0 and x0 + edge * e_i.
template <typename F>
NelderMeadResult nelder_mead(F&& f, std::vector<double> x0, const NelderMeadOptions& opt = {}) {
  const std::size_t dim = x0.size();
  NelderMeadResult res;
  std::vector<std::vector<double>> pts(dim + 1, x0);
  std::vector<double> vals(dim + 1);
  for (std::size_t i = 0; i < dim; ++i) pts[i + 1][i] += opt.initial_edge;

  auto eval = [&](const std::vector<double>& x) {
    ++res.evaluations;
    return f(x);
  };
  for (std::size_t i = 0; i <= dim; ++i) vals[i] = eval(pts[i]);

  std::vector<std::size_t> idx(dim + 1);
  std::vector<double> centroid(dim), xr(dim), xe(dim), xc(dim);

  auto diameter = [&](std::size_t best) {
    double d = 0.0;
    for (std::size_t i = 0; i <= dim; ++i)
      for (std::size_t k = 0; k < dim; ++k) d = std::max(d, std::abs(pts[i][k] - pts[best][k]));
    return d;
  };
  auto along = [&](std::vector<double>& out, const std::vector<double>& from, double t) {
    // out = centroid + t * (centroid - from)
    for (std::size_t k = 0; k < dim; ++k) out[k] = centroid[k] + t * (centroid[k] - from[k]);
  };

  while (true) {
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return vals[a] < vals[b]; });
    const std::size_t best = idx.front();
    const std::size_t worst = idx.back();
    const std::size_t second_worst = idx[dim > 0 ? dim - 1 : 0];

    if (dim == 0 || diameter(best) < opt.simplex_tol) {
      res.converged = true;
      break;
    }
    if (res.iterations >= opt.max_iters) break;
    ++res.iterations;

    std::fill(centroid.begin(), centroid.end(), 0.0);
    for (std::size_t i = 0; i < dim; ++i)
      for (std::size_t k = 0; k < dim; ++k) centroid[k] += pts[idx[i]][k];
    for (auto& c : centroid) c /= static_cast<double>(dim);

    along(xr, pts[worst], opt.reflection);
    const double fr = eval(xr);

    if (fr < vals[best]) {
      along(xe, pts[worst], opt.reflection * opt.expansion);
      const double fe = eval(xe);
      if (fe < fr) {
        pts[worst] = xe;
        vals[worst] = fe;
      } else {
        pts[worst] = xr;
        vals[worst] = fr;
      }
      continue;
    }
    if (fr < vals[second_worst]) {
      pts[worst] = xr;
      vals[worst] = fr;
      continue;
    }

    bool accepted = false;
    if (fr < vals[worst]) {
      along(xc, pts[worst], opt.reflection * opt.contraction);  // outside
      const double fc = eval(xc);
      if (fc <= fr) {
        pts[worst] = xc;
        vals[worst] = fc;
        accepted = true;
      }
    } else {
      along(xc, pts[worst], -opt.contraction);  // inside
      const double fc = eval(xc);
      if (fc < vals[worst]) {
        pts[worst] = xc;
        vals[worst] = fc;
        accepted = true;
      }
    }
    if (accepted) continue;

    for (std::size_t i = 0; i <= dim; ++i) {
      if (i == best) continue;
      for (std::size_t k = 0; k < dim; ++k) pts[i][k] = pts[best][k] + opt.shrink * (pts[i][k] - pts[best][k]);
      vals[i] = eval(pts[i]);
    }
  }

  const auto best_it = std::min_element(vals.begin(), vals.end());
  const auto b = static_cast<std::size_t>(best_it - vals.begin());
  res.x = pts[b];
  res.value = vals[b];
  return res;
}

}  // namespace bohr
