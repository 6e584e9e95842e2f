#pragma once

// INI-style algebra presentations:
//
//   [field]
//   p = 7
//   ell = 3
//
//   [generators]
//   x1 = 1 0          # name = degree vector
//   x2 = 0 1
//
//   [relations]
//   x1 x2 = 1         # x1 x2 = q^1 x2 x1
//   x3 x4 -> 2 x2 x5  # straightening: x3 x4 = q^2 x2 x5
//
//   [run]
//   window = 12       # free-form key = value pairs for the CLI
//
// Whitespace-insensitive; '#' and ';' start comments.

#include <cstddef>
#include <cstdint>
#include <istream>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "frobex/grpdeg.hpp"

namespace frobex {

class ConfigError : public std::runtime_error {
 public:
  ConfigError(const std::string& source, std::size_t line, const std::string& message);
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

struct GeneratorSpec {
  std::string name;
  GroupElement degree;
};

struct StraighteningSpec {
  std::size_t left = 0, right = 0;
  std::int64_t exponent = 0;
  std::size_t out_left = 0, out_right = 0;
};

struct Presentation {
  std::optional<std::uint64_t> p;
  std::optional<std::uint64_t> ell;
  std::vector<GeneratorSpec> generators;
  /// Antisymmetric n x n; entry [i][j] is e with x_i x_j = q^e x_j x_i.
  std::vector<std::vector<std::int64_t>> commutation;
  std::vector<StraighteningSpec> straightening;
  std::map<std::string, std::string> run;
  std::map<std::string, std::size_t> run_lines;

  std::size_t generator_index(const std::string& name) const;  // throws std::out_of_range
};

Presentation parse_presentation(std::istream& in, const std::string& source = "<config>");
Presentation load_presentation(const std::string& path);

}  // namespace frobex
