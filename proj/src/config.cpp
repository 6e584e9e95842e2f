#include "frobex/config.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

namespace frobex {

namespace {

std::string trim(const std::string& s) {
  auto b = std::find_if_not(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); });
  auto e = std::find_if_not(s.rbegin(), s.rend(), [](unsigned char c) { return std::isspace(c); }).base();
  return b < e ? std::string(b, e) : std::string();
}

std::vector<std::string> tokens(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  for (std::string t; in >> t;) out.push_back(t);
  return out;
}

std::int64_t parse_int(const std::string& text, const std::string& source, std::size_t line) {
  std::size_t used = 0;
  std::int64_t v = 0;
  try {
    v = std::stoll(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != text.size() || text.empty()) throw ConfigError(source, line, "expected an integer, got '" + text + "'");
  return v;
}

struct PendingRelation {
  std::size_t line;
  std::string text;
};

}  // namespace

ConfigError::ConfigError(const std::string& source, std::size_t line, const std::string& message)
    : std::runtime_error(source + ":" + std::to_string(line) + ": " + message), line_(line) {}

std::size_t Presentation::generator_index(const std::string& name) const {
  for (std::size_t i = 0; i < generators.size(); ++i) {
    if (generators[i].name == name) return i;
  }
  throw std::out_of_range("unknown generator '" + name + "'");
}

Presentation parse_presentation(std::istream& in, const std::string& source) {
  Presentation pres;
  std::string section;
  std::vector<PendingRelation> relations;
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string line = raw.substr(0, raw.find_first_of("#;"));
    line = trim(line);
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']') throw ConfigError(source, line_no, "unterminated section header");
      section = trim(line.substr(1, line.size() - 2));
      if (section != "field" && section != "generators" && section != "relations" && section != "run") {
        throw ConfigError(source, line_no, "unknown section [" + section + "]");
      }
      continue;
    }
    if (section.empty()) throw ConfigError(source, line_no, "entry outside of any section");
    if (section == "relations") {
      relations.push_back({line_no, line});
      continue;
    }
    auto eq = line.find('=');
    if (eq == std::string::npos) throw ConfigError(source, line_no, "expected 'key = value'");
    std::string key = trim(line.substr(0, eq));
    std::string value = trim(line.substr(eq + 1));
    if (key.empty() || value.empty()) throw ConfigError(source, line_no, "expected 'key = value'");
    if (section == "field") {
      std::int64_t v = parse_int(value, source, line_no);
      if (v <= 0) throw ConfigError(source, line_no, key + " must be positive");
      if (key == "p") {
        pres.p = static_cast<std::uint64_t>(v);
      } else if (key == "ell") {
        pres.ell = static_cast<std::uint64_t>(v);
      } else {
        throw ConfigError(source, line_no, "unknown field key '" + key + "'");
      }
    } else if (section == "generators") {
      if (tokens(key).size() != 1) throw ConfigError(source, line_no, "generator names are single tokens");
      for (const auto& g : pres.generators) {
        if (g.name == key) throw ConfigError(source, line_no, "duplicate generator '" + key + "'");
      }
      std::vector<std::int64_t> coords;
      for (const auto& t : tokens(value)) coords.push_back(parse_int(t, source, line_no));
      if (!pres.generators.empty() && pres.generators.front().degree.rank() != coords.size()) {
        throw ConfigError(source, line_no, "degree vectors must all have the same length");
      }
      pres.generators.push_back({key, GroupElement(std::move(coords))});
    } else {
      pres.run[key] = value;
      pres.run_lines[key] = line_no;
    }
  }

  const std::size_t n = pres.generators.size();
  pres.commutation.assign(n, std::vector<std::int64_t>(n, 0));
  std::vector<std::vector<bool>> seen(n, std::vector<bool>(n, false));
  auto lookup = [&](const std::string& name, std::size_t line) {
    try {
      return pres.generator_index(name);
    } catch (const std::out_of_range&) {
      throw ConfigError(source, line, "unknown generator '" + name + "'");
    }
  };
  for (const auto& rel : relations) {
    auto arrow = rel.text.find("->");
    if (arrow != std::string::npos) {
      auto lhs = tokens(rel.text.substr(0, arrow));
      auto rhs = tokens(rel.text.substr(arrow + 2));
      if (lhs.size() != 2 || rhs.size() != 3) {
        throw ConfigError(source, rel.line, "straightening rules read 'a b -> exponent c d'");
      }
      pres.straightening.push_back({lookup(lhs[0], rel.line), lookup(lhs[1], rel.line),
                                    parse_int(rhs[0], source, rel.line), lookup(rhs[1], rel.line),
                                    lookup(rhs[2], rel.line)});
      continue;
    }
    auto eq = rel.text.find('=');
    if (eq == std::string::npos) throw ConfigError(source, rel.line, "expected 'a b = exponent' or 'a b -> e c d'");
    auto lhs = tokens(rel.text.substr(0, eq));
    auto rhs = tokens(rel.text.substr(eq + 1));
    if (lhs.size() != 2 || rhs.size() != 1) throw ConfigError(source, rel.line, "commutation reads 'a b = exponent'");
    std::size_t i = lookup(lhs[0], rel.line), j = lookup(lhs[1], rel.line);
    if (i == j) throw ConfigError(source, rel.line, "a generator always commutes with itself");
    std::int64_t e = parse_int(rhs[0], source, rel.line);
    if (seen[i][j] && pres.commutation[i][j] != e) {
      throw ConfigError(source, rel.line, "conflicting commutation exponent for " + lhs[0] + " " + lhs[1]);
    }
    seen[i][j] = seen[j][i] = true;
    pres.commutation[i][j] = e;
    pres.commutation[j][i] = -e;
  }
  return pres;
}

Presentation load_presentation(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError(path, 0, "cannot open file");
  return parse_presentation(in, path);
}

}  // namespace frobex
