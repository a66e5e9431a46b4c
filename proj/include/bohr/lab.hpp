//
// file: lab.hpp
//
// Command implementations behind the bohr_lab executable. Each command
// writes to the given streams and returns the process exit code:
//   0  hypotheses pass and the inequality holds
//   1  input or parameter error
//   2  the inequality is violated (hypotheses pass)
//   3  a hypothesis fails
//
#pragma once

#include <charconv>
#include <cmath>
#include <optional>
#include <ostream>
#include <string>
#include <system_error>
#include <vector>

#include "bohr/hypotheses.hpp"
#include "bohr/instance_io.hpp"
#include "bohr/radius_search.hpp"
#include "bohr/scalar.hpp"
#include "bohr/witnesses.hpp"

namespace bohr::lab {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInputError = 1;
inline constexpr int kExitViolated = 2;
inline constexpr int kExitHypotheses = 3;

enum class Format { text, json, csv };

inline std::optional<Format> parse_format(std::string_view s) {
  if (s == "text") return Format::text;
  if (s == "json") return Format::json;
  if (s == "csv") return Format::csv;
  return std::nullopt;
}

/// Shortest round-trip decimal, independent of the global locale.
inline std::string num(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  return {buf, res.ptr};
}

/// Parses "re" or "re:im" without consulting the locale.
inline Complex parse_complex(std::string_view token) {
  auto parse_real = [&](std::string_view s) {
    double v = 0.0;
    const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
    if (res.ec != std::errc{} || res.ptr != s.data() + s.size() || s.empty())
      throw Error(ErrorCode::ParseError, "bad number '" + std::string(s) + "'");
    return v;
  };
  const auto colon = token.find(':');
  if (colon == std::string_view::npos) return {parse_real(token), 0.0};
  return {parse_real(token.substr(0, colon)), parse_real(token.substr(colon + 1))};
}

/// Comma-separated list of complex tokens.
inline std::vector<Complex> parse_coefficients(std::string_view list) {
  std::vector<Complex> out;
  std::size_t start = 0;
  while (start <= list.size()) {
    const auto comma = list.find(',', start);
    const auto end = comma == std::string_view::npos ? list.size() : comma;
    std::string_view tok = list.substr(start, end - start);
    while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
    while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
    out.push_back(parse_complex(tok));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

inline json report_to_json(const HypothesisReport& r) {
  json conds = json::array();
  for (const auto& c : r.conditions) conds.push_back({{"name", c.name}, {"pass", c.pass}, {"slack", c.slack}});
  return {{"mode", std::string(to_string(r.mode))}, {"overall", r.overall}, {"conditions", std::move(conds)}};
}

inline json series_to_json(const AlphaSeries& s) {
  json j{{"alpha0", s.alpha0}, {"magnitudes", s.magnitudes}};
  if (s.tail == AlphaSeries::Tail::constant)
    j["tail"] = {{"type", "constant"}, {"value", s.tail_value}, {"from", s.tail_start}};
  else
    j["tail"] = {{"type", "zero"}};
  return j;
}

// ---------------------------------------------------------------------------

struct VerifyArgs {
  std::string input;
  double r = 1.0 / 3.0;
  double tol = kDefaultTol;
  Format format = Format::text;
};

inline int cmd_verify(const VerifyArgs& args, std::ostream& out, std::ostream& err) {
  if (!(args.r >= 0.0 && args.r < 1.0)) {
    err << "error: r must lie in [0, 1)\n";
    return kExitInputError;
  }
  std::optional<BohrInstance> inst;
  try {
    inst = read_instance(args.input);
  } catch (const Error& e) {
    err << "error: " << args.input << ": " << e.what() << "\n";
    return kExitInputError;
  }

  const HypothesisReport report = check_hypotheses(*inst, args.tol);
  std::optional<AlphaSeries> series;
  std::string series_error;
  try {
    series = alpha_series(*inst, args.tol);
  } catch (const Error& e) {
    series_error = e.what();
  }
  std::optional<InequalityCheck> check;
  std::optional<double> radius;
  const double budget = trace(inst->s).real();
  if (series) {
    check = check_inequality(*series, budget, args.r, args.tol);
    if (budget >= series->alpha0) radius = critical_radius(*series, budget);
  }

  int code = kExitOk;
  if (!report.overall || !series)
    code = kExitHypotheses;
  else if (!check->holds)
    code = kExitViolated;

  if (args.format == Format::json) {
    json j{{"report", report_to_json(report)}, {"r", args.r}, {"exit_code", code}};
    if (series) {
      j["alpha"] = series_to_json(*series);
      j["lhs"] = check->lhs;
      j["rhs"] = check->rhs;
      j["slack"] = check->slack;
      j["holds"] = check->holds;
      j["critical_radius"] = radius ? json(*radius) : json(nullptr);
    } else {
      j["alpha_error"] = series_error;
    }
    out << j.dump(2) << "\n";
    return code;
  }

  out << "mode: " << to_string(report.mode) << "\n";
  for (const auto& c : report.conditions)
    out << "  " << c.name << ": " << (c.pass ? "pass" : "FAIL") << " (slack " << num(c.slack) << ")\n";
  out << "hypotheses: " << (report.overall ? "pass" : "FAIL") << "\n";
  if (series) {
    out << "alpha0: " << num(series->alpha0) << "\n";
    for (std::size_t m = 0; m < series->magnitudes.size(); ++m)
      out << "|alpha_" << m + 1 << "|: " << num(series->magnitudes[m]) << "\n";
    if (series->tail == AlphaSeries::Tail::constant)
      out << "|alpha_m| for m >= " << series->tail_start << ": " << num(series->tail_value) << "\n";
    out << "r: " << num(args.r) << "\n";
    out << "lhs: " << num(check->lhs) << "\n";
    out << "rhs: " << num(check->rhs) << "\n";
    out << "slack: " << num(check->slack) << "\n";
    out << "inequality: " << (check->holds ? "holds" : "VIOLATED") << "\n";
    out << "critical_radius: " << (radius ? num(*radius) : std::string("none (budget below alpha0)")) << "\n";
  } else {
    out << "alpha series: " << series_error << "\n";
  }
  return code;
}

// ---------------------------------------------------------------------------

struct WitnessArgs {
  std::string family;
  std::size_t n = 3;
  double r_target = 0.35;
  std::string output;
  double tol = kDefaultTol;
  Format format = Format::text;
};

inline int cmd_witness(const WitnessArgs& args, std::ostream& out, std::ostream& err) {
  std::optional<BohrInstance> inst;
  std::optional<RemarkParameters> remark;
  try {
    if (args.family == "general-n") {
      inst = general_witness(args.n);
    } else if (args.family == "n3") {
      inst = three_by_three_witness();
    } else if (args.family == "remark-n2") {
      remark = remark_parameters(args.r_target);
      inst = remark_two_witness(args.r_target);
    } else {
      err << "error: unknown family '" << args.family << "' (expected general-n, n3 or remark-n2)\n";
      return kExitInputError;
    }
    if (!args.output.empty()) write_instance(*inst, args.output);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }

  const HypothesisReport report = check_hypotheses(*inst, args.tol);
  const double radius = critical_radius(*inst);
  std::optional<InequalityCheck> at_target;
  if (remark) at_target = check_inequality(*inst, args.r_target, args.tol);

  if (args.format == Format::json) {
    json j{{"family", args.family},
           {"n", inst->order()},
           {"critical_radius", radius},
           {"hypotheses", report_to_json(report)}};
    if (remark) {
      j["theta"] = remark->theta;
      j["k"] = remark->k;
      j["r_target"] = args.r_target;
      j["lhs_at_target"] = at_target->lhs;
      j["rhs"] = at_target->rhs;
      j["violated_at_target"] = !at_target->holds;
    }
    if (args.output.empty()) j["instance"] = instance_to_json(*inst);
    out << j.dump(2) << "\n";
  } else {
    out << "family: " << args.family << "\n";
    out << "n: " << inst->order() << "\n";
    out << "critical_radius: " << num(radius) << "\n";
    out << "hypotheses (" << to_string(report.mode) << "): " << (report.overall ? "pass" : "FAIL") << "\n";
    if (remark) {
      out << "theta: " << num(remark->theta) << "\n";
      out << "k: " << remark->k << "\n";
      out << "violated_r: " << num(args.r_target) << " (lhs " << num(at_target->lhs) << " > rhs "
          << num(at_target->rhs) << ")\n";
    }
    if (!args.output.empty()) out << "written: " << args.output << "\n";
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------

struct RadiusSearchArgs {
  SearchConfig config;
  std::string output;
  Format format = Format::text;
};

inline int cmd_radius_search(const RadiusSearchArgs& args, std::ostream& out, std::ostream& err) {
  std::optional<RadiusEstimate> est;
  try {
    est = search(args.config);
    if (!args.output.empty()) write_instance(est->instance, args.output);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  const std::size_t n = args.config.n;
  const double bound = static_cast<double>(n) / (3.0 * static_cast<double>(n) - 2.0);
  if (args.format == Format::json) {
    json j{{"n", n},
           {"restarts", args.config.restarts},
           {"seed", args.config.seed},
           {"max_iters", args.config.max_iters},
           {"r_star", est->r_star},
           {"general_family_bound", bound},
           {"evaluations", est->evaluations},
           {"per_restart_best", est->per_restart_best}};
    if (args.output.empty()) j["instance"] = instance_to_json(est->instance);
    out << j.dump(2) << "\n";
  } else {
    out << "n: " << n << "\n";
    out << "restarts: " << args.config.restarts << "\n";
    out << "seed: " << args.config.seed << "\n";
    out << "r_star: " << num(est->r_star) << "\n";
    out << "general_family_bound: " << num(bound) << "\n";
    out << "evaluations: " << est->evaluations << "\n";
    out << "per_restart_best:";
    for (double v : est->per_restart_best) out << " " << num(v);
    out << "\n";
    if (!args.output.empty()) out << "written: " << args.output << "\n";
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------

struct TableRow {
  std::size_t n;
  double formula;
  double bisection;
  double abs_diff;
};

inline std::vector<TableRow> general_family_table(std::size_t max_n) {
  std::vector<TableRow> rows;
  for (std::size_t n = 2; n <= max_n; ++n) {
    const double nd = static_cast<double>(n);
    const double formula = nd / (3.0 * nd - 2.0);
    const double bisected = critical_radius(general_witness(n));
    rows.push_back({n, formula, bisected, std::abs(formula - bisected)});
  }
  return rows;
}

struct TableArgs {
  std::size_t max_n = 10;
  Format format = Format::csv;
};

inline int cmd_table(const TableArgs& args, std::ostream& out, std::ostream& err) {
  if (args.max_n < 2) {
    err << "error: max-n must be at least 2\n";
    return kExitInputError;
  }
  const auto rows = general_family_table(args.max_n);
  if (args.format == Format::json) {
    json j = json::array();
    for (const auto& r : rows)
      j.push_back({{"n", r.n}, {"formula", r.formula}, {"bisection", r.bisection}, {"abs_diff", r.abs_diff}});
    out << j.dump(2) << "\n";
    return kExitOk;
  }
  const char* sep = args.format == Format::csv ? "," : "\t";
  out << "n" << sep << "formula" << sep << "bisection" << sep << "abs_diff\n";
  for (const auto& r : rows)
    out << r.n << sep << num(r.formula) << sep << num(r.bisection) << sep << num(r.abs_diff) << "\n";
  return kExitOk;
}

// ---------------------------------------------------------------------------

struct ScalarArgs {
  std::string coeffs;          // "a0,a1,..." with tokens "re" or "re:im"
  std::optional<double> mobius;
  std::string tail_c;          // geometric tail, complex tokens
  std::string tail_rho;
  double r = 1.0 / 3.0;
  std::size_t gridpoints = 4096;
  double tol = kDefaultTol;
  Format format = Format::text;
};

inline int cmd_scalar(const ScalarArgs& args, std::ostream& out, std::ostream& err) {
  std::optional<CoeffSeries> series;
  std::optional<ClassicalCheck> check;
  try {
    if (args.mobius) {
      if (!args.coeffs.empty()) throw Error(ErrorCode::ParseError, "give either --coeffs or --mobius, not both");
      series = mobius_series(*args.mobius);
    } else {
      if (args.coeffs.empty()) throw Error(ErrorCode::ParseError, "no coefficients given");
      std::optional<CoeffSeries::Geometric> tail;
      if (!args.tail_c.empty() || !args.tail_rho.empty()) {
        if (args.tail_c.empty() || args.tail_rho.empty())
          throw Error(ErrorCode::ParseError, "a geometric tail needs both --tail-c and --tail-rho");
        tail = CoeffSeries::Geometric{parse_complex(args.tail_c), parse_complex(args.tail_rho)};
      }
      series = CoeffSeries::make(parse_coefficients(args.coeffs), tail);
    }
    check = classical_verify(*series, args.r, args.gridpoints, args.tol);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  const int code = check->holds ? kExitOk : kExitViolated;
  if (args.format == Format::json) {
    out << json{{"r", args.r},
                {"bohr_sum", check->lhs},
                {"sup_norm_estimate", check->rhs},
                {"holds", check->holds},
                {"gridpoints", args.gridpoints}}
               .dump(2)
        << "\n";
  } else {
    out << "r: " << num(args.r) << "\n";
    out << "bohr_sum: " << num(check->lhs) << "\n";
    out << "sup_norm_estimate: " << num(check->rhs) << "\n";
    out << "inequality: " << (check->holds ? "holds" : "VIOLATED") << "\n";
  }
  return code;
}

}  // namespace bohr::lab
