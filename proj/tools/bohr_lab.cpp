//
// file: bohr_lab.cpp
//
// Command-line front end: verify, witness, radius-search, table, scalar.
//
#include <iostream>
#include <string>
#include <thread>

#include <CLI11.hpp>

#include "bohr/lab.hpp"

int main(int argc, char** argv) {
  using namespace bohr;
  using namespace bohr::lab;

  CLI::App app{"Bohr inequality laboratory for matrices and truncated trace-class operators"};
  app.require_subcommand(1);
  app.fallthrough();

  double tol = kDefaultTol;
  std::string output;
  std::string format_name;
  std::uint64_t seed = 7;
  unsigned threads = std::max(1u, std::thread::hardware_concurrency());
  app.add_option("--tol", tol, "Relative tolerance")->check(CLI::PositiveNumber);
  app.add_option("--output,-o", output, "Output file for instance documents");
  app.add_option("--format", format_name, "Output format")->check(CLI::IsMember({"json", "csv", "text"}));
  app.add_option("--seed", seed, "Random seed");
  app.add_option("--threads", threads, "Worker threads for radius-search")->check(CLI::PositiveNumber);

  auto* verify = app.add_subcommand("verify", "Check hypotheses and the inequality for an instance document");
  VerifyArgs verify_args;
  verify->add_option("input", verify_args.input, "Instance document (JSON)")->required();
  verify->add_option("--r", verify_args.r, "Radius in [0, 1)");

  auto* witness = app.add_subcommand("witness", "Write an extremal witness instance");
  WitnessArgs witness_args;
  witness->add_option("--family", witness_args.family, "general-n | n3 | remark-n2")->required();
  witness->add_option("--n", witness_args.n, "Order for general-n");
  witness->add_option("--r-target", witness_args.r_target, "Target radius in (1/3, 1) for remark-n2");

  auto* radius = app.add_subcommand("radius-search", "Estimate the extremal radius for order n");
  RadiusSearchArgs radius_args;
  radius->add_option("--n", radius_args.config.n, "Matrix order (>= 2)")->required();
  radius->add_option("--restarts", radius_args.config.restarts, "Independent Nelder-Mead descents");
  radius->add_option("--max-iters", radius_args.config.max_iters, "Iteration cap per restart");
  radius->add_option("--simplex-tol", radius_args.config.simplex_tol, "Simplex diameter stopping tolerance");

  auto* table = app.add_subcommand("table", "Critical radius of the general family against n/(3n-2)");
  TableArgs table_args;
  table->add_option("--max-n", table_args.max_n, "Largest order")->required();

  auto* scalar = app.add_subcommand("scalar", "Classical Bohr inequality for a power series");
  ScalarArgs scalar_args;
  scalar->add_option("--coeffs", scalar_args.coeffs, "Comma-separated coefficients, each 're' or 're:im'");
  scalar->add_option("--mobius", scalar_args.mobius, "Use (a - z)/(1 - a z) with this a in [0, 1)");
  scalar->add_option("--tail-c", scalar_args.tail_c, "Geometric tail leading coefficient");
  scalar->add_option("--tail-rho", scalar_args.tail_rho, "Geometric tail ratio, |rho| < 1");
  scalar->add_option("--r", scalar_args.r, "Radius in [0, 1)");
  scalar->add_option("--gridpoints", scalar_args.gridpoints, "Circle grid size for the sup norm");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitInputError;
  }

  auto format_or = [&](Format fallback) {
    return format_name.empty() ? fallback : *parse_format(format_name);
  };

  if (*verify) {
    verify_args.tol = tol;
    verify_args.format = format_or(Format::text);
    return cmd_verify(verify_args, std::cout, std::cerr);
  }
  if (*witness) {
    witness_args.tol = tol;
    witness_args.output = output;
    witness_args.format = format_or(Format::text);
    return cmd_witness(witness_args, std::cout, std::cerr);
  }
  if (*radius) {
    radius_args.config.seed = seed;
    radius_args.config.threads = threads;
    radius_args.output = output;
    radius_args.format = format_or(Format::text);
    return cmd_radius_search(radius_args, std::cout, std::cerr);
  }
  if (*table) {
    table_args.format = format_or(Format::csv);
    return cmd_table(table_args, std::cout, std::cerr);
  }
  if (*scalar) {
    scalar_args.tol = tol;
    scalar_args.format = format_or(Format::text);
    return cmd_scalar(scalar_args, std::cout, std::cerr);
  }
  return kExitInputError;
}
