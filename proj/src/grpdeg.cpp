#include "frobex/grpdeg.hpp"

#include <algorithm>
#include <sstream>

namespace frobex {

namespace {

void require_same_rank(const GroupElement& a, const GroupElement& b) {
  if (a.rank() != b.rank()) {
    throw DimensionError("group elements of rank " + std::to_string(a.rank()) + " and " +
                         std::to_string(b.rank()) + " are not comparable");
  }
}

}  // namespace

bool GroupElement::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](std::int64_t c) { return c == 0; });
}

GroupElement& GroupElement::operator+=(const GroupElement& other) {
  require_same_rank(*this, other);
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += other.coords_[i];
  return *this;
}

GroupElement& GroupElement::operator-=(const GroupElement& other) {
  require_same_rank(*this, other);
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= other.coords_[i];
  return *this;
}

GroupElement GroupElement::operator-() const {
  GroupElement out = *this;
  for (auto& c : out.coords_) c = -c;
  return out;
}

GroupElement operator*(std::int64_t k, const GroupElement& g) {
  GroupElement out = g;
  for (auto& c : out.coords_) c *= k;
  return out;
}

bool GroupElement::operator==(const GroupElement& other) const {
  require_same_rank(*this, other);
  return coords_ == other.coords_;
}

std::strong_ordering GroupElement::operator<=>(const GroupElement& other) const {
  return lex_compare(*this, other);
}

std::strong_ordering lex_compare(const GroupElement& g, const GroupElement& h) {
  require_same_rank(g, h);
  for (std::size_t i = 0; i < g.rank(); ++i) {
    if (g[i] != h[i]) return g[i] < h[i] ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

bool in_positive_cone(const GroupElement& g) {
  for (std::int64_t c : g.coords()) {
    if (c != 0) return c > 0;
  }
  return true;
}

std::string to_string(const GroupElement& g) {
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < g.rank(); ++i) {
    if (i) out << ',';
    out << g[i];
  }
  out << ')';
  return out.str();
}

GroupElement parse_group_element(const std::string& text) {
  std::string cleaned;
  for (char ch : text) cleaned += (ch == '(' || ch == ')' || ch == ',') ? ' ' : ch;
  std::istringstream in(cleaned);
  std::vector<std::int64_t> coords;
  std::string token;
  while (in >> token) {
    std::size_t used = 0;
    std::int64_t value = 0;
    try {
      value = std::stoll(token, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != token.size()) throw std::invalid_argument("not an integer: '" + token + "'");
    coords.push_back(value);
  }
  if (coords.empty()) throw std::invalid_argument("empty group element '" + text + "'");
  return GroupElement(std::move(coords));
}

const GroupElement& Degree::value() const {
  if (!value_) throw DomainError("degree is -infinity");
  return *value_;
}

Degree operator+(const Degree& a, const Degree& b) {
  if (a.is_neg_inf() || b.is_neg_inf()) return Degree::neg_inf();
  return Degree(a.value() + b.value());
}

bool Degree::operator==(const Degree& other) const {
  if (is_neg_inf() || other.is_neg_inf()) return is_neg_inf() == other.is_neg_inf();
  return *value_ == *other.value_;
}

std::strong_ordering Degree::operator<=>(const Degree& other) const {
  if (is_neg_inf() && other.is_neg_inf()) return std::strong_ordering::equal;
  if (is_neg_inf()) return std::strong_ordering::less;
  if (other.is_neg_inf()) return std::strong_ordering::greater;
  return lex_compare(*value_, *other.value_);
}

std::string to_string(const Degree& d) { return d.is_neg_inf() ? "-inf" : to_string(d.value()); }

void DegreeMultiset::add(const GroupElement& g, std::int64_t multiplicity) {
  if (multiplicity <= 0) throw DomainError("multiplicities must be positive");
  if (!entries_.empty() && entries_.begin()->first.rank() != g.rank()) {
    throw DimensionError("degree multiset mixes ranks");
  }
  entries_[g] += multiplicity;
}

void DegreeMultiset::remove_one(const GroupElement& g) {
  auto it = entries_.find(g);
  if (it == entries_.end()) throw DomainError("degree " + to_string(g) + " not in multiset");
  if (--it->second == 0) entries_.erase(it);
}

std::int64_t DegreeMultiset::multiplicity(const GroupElement& g) const {
  auto it = entries_.find(g);
  return it == entries_.end() ? 0 : it->second;
}

std::int64_t DegreeMultiset::total() const {
  std::int64_t sum = 0;
  for (const auto& [g, m] : entries_) sum += m;
  return sum;
}

const GroupElement& DegreeMultiset::min() const {
  if (entries_.empty()) throw DomainError("empty degree multiset");
  return entries_.begin()->first;
}

const GroupElement& DegreeMultiset::max() const {
  if (entries_.empty()) throw DomainError("empty degree multiset");
  return entries_.rbegin()->first;
}

DegreeMultiset DegreeMultiset::reflected(const GroupElement& d) const {
  DegreeMultiset out;
  for (const auto& [g, m] : entries_) out.add(d - g, m);
  return out;
}

std::optional<GroupElement> multiset_symmetry_witness(const DegreeMultiset& D) {
  if (D.empty()) throw DomainError("symmetry witness of an empty multiset");
  GroupElement d = D.min() + D.max();
  if (D.reflected(d) == D) return d;
  return std::nullopt;
}

}  // namespace frobex
