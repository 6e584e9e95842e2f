#pragma once

// Run configurations, the verification pipelines behind each CLI command,
// and their plain-text reports.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "frobex/algebra.hpp"
#include "frobex/frobenius.hpp"
#include "frobex/grpdeg.hpp"
#include "frobex/rees.hpp"

namespace frobex {

struct RunConfig {
  std::string command;  // qas-verify | qweyl-transfer | rees-demo | grassmannian-census | nakayama
  std::optional<std::uint64_t> p;
  std::uint64_t ell = 3;
  std::size_t n = 2;
  /// Empty means every generator has degree (1) in Z.
  std::vector<GroupElement> degrees;
  /// Empty means a random antisymmetric matrix drawn from the seed.
  std::vector<std::vector<std::int64_t>> C;
  std::optional<std::int64_t> window;
  std::uint64_t seed = 1;
  /// Grassmannian scalars: "default" or "alternate".
  std::string scalars = "default";
  std::optional<std::string> output;
  std::optional<std::string> config_path;
};

inline const std::vector<std::string>& known_commands() {
  static const std::vector<std::string> names = {"qas-verify", "qweyl-transfer", "rees-demo", "grassmannian-census",
                                                 "nakayama"};
  return names;
}

/// Parses "1 0; 0 1" style lists: rows separated by ';'.
std::vector<GroupElement> parse_degree_list(const std::string& text);
std::vector<std::vector<std::int64_t>> parse_matrix(const std::string& text);

/// Applies a presentation file: [field] and [generators] and [relations]
/// replace p, ell, n, degrees and C; [run] keys (window, seed, n, scalars)
/// replace the matching options. Throws ConfigError with a line number.
void apply_config_file(RunConfig& cfg);
/// FROBEX_SEED, when set, replaces the seed.
void apply_environment(RunConfig& cfg);

std::vector<std::vector<std::int64_t>> random_antisymmetric(std::size_t n, std::uint64_t ell, std::uint64_t seed);

struct RunResult {
  int exit_code = 0;  // 0 expected verdict, 1 mismatch, 2 input error
  std::string report;
};

/// Runs the command and returns its report; never throws for input errors.
RunResult run_command(RunConfig cfg);

std::string render_certificate(const CentralFreeExtension& E, const FrobeniusCertificate& cert);

struct QweylTransfer {
  std::uint64_t ell = 0;
  GroupElement window;
  TableComparison gr_table;
  FrobeniusCertificate graded;
  FrobeniusCertificate filtered;
  FrobeniusCertificate rees;
  TableComparison m0_table;
  TableComparison m1_table;
  HomomorphismCheck m0_hom;
  HomomorphismCheck m1_hom;
  bool ok() const;
};

/// gr check to degree 3 ell, lift of the quantum-plane form, verification
/// of the filtered and Rees extensions, and both canonical quotients.
QweylTransfer qweyl_transfer(const RootField& field, std::optional<GroupElement> window = std::nullopt,
                             std::uint64_t seed = 1);

}  // namespace frobex
