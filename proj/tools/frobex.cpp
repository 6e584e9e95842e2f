// frobex: verify or refute Frobenius extensions of quantum algebras.
//
//   frobex qas-verify --n 2 --ell 3 --p 7
//   frobex grassmannian-census --ell 2 --p 7
//
// Exit codes: 0 expected verdict, 1 verdict mismatch, 2 input error.

#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "frobex/report.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Frobenius extension verifier for quantum algebras"};
  app.require_subcommand(1);

  frobex::RunConfig cfg;
  std::optional<std::uint64_t> p, ell, seed;
  std::optional<std::size_t> n;
  std::optional<std::int64_t> window;
  std::string degrees, matrix, output, config, scalars;

  for (const auto& name : frobex::known_commands()) {
    CLI::App* sub = app.add_subcommand(name);
    sub->add_option("--p", p, "prime modulus (default: smallest prime >= 101 with ell | p-1)");
    sub->add_option("--ell", ell, "order of the root of unity");
    sub->add_option("--n", n, "number of generators (quantum affine space)");
    sub->add_option("--degrees", degrees, "generator degrees, e.g. \"1 0; 0 1\"");
    sub->add_option("--C", matrix, "commutation exponents, e.g. \"0 1; -1 0\"");
    sub->add_option("--window", window, "Rees window, or freeness cutoff for the census");
    sub->add_option("--seed", seed, "seed for zeta and sampling");
    sub->add_option("--scalars", scalars, "Grassmannian scalars: default | alternate");
    sub->add_option("--output", output, "report file (default: stdout)");
    sub->add_option("--config", config, "presentation file; overrides flags");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  cfg.command = app.get_subcommands().front()->get_name();
  if (p) cfg.p = *p;
  if (ell) cfg.ell = *ell;
  if (n) cfg.n = *n;
  if (seed) cfg.seed = *seed;
  if (window) cfg.window = *window;
  if (!scalars.empty()) cfg.scalars = scalars;
  if (!config.empty()) cfg.config_path = config;
  if (!output.empty()) cfg.output = output;

  frobex::RunResult result;
  try {
    if (!degrees.empty()) cfg.degrees = frobex::parse_degree_list(degrees);
    if (!matrix.empty()) cfg.C = frobex::parse_matrix(matrix);
    frobex::apply_environment(cfg);
    result = frobex::run_command(cfg);
  } catch (const std::exception& e) {
    result = {2, std::string("error: ") + e.what() + "\n"};
  }

  if (result.exit_code == 2) {
    const auto pos = result.report.find("error: ");
    std::cerr << (pos == std::string::npos ? result.report : result.report.substr(pos));
  }
  if (cfg.output) {
    std::ofstream out(*cfg.output, std::ios::binary);
    if (!out) {
      std::cerr << "error: cannot write " << *cfg.output << '\n';
      return 2;
    }
    out << result.report;
  } else {
    std::cout << result.report;
  }
  return result.exit_code;
}
