#pragma once

// Totally ordered groups Z^n (lexicographic order), degrees with a bottom
// value, and degree multisets.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace frobex {

class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// An element of Z^n, written additively. Comparison is lexicographic;
/// comparing elements of different rank throws DimensionError.
class GroupElement {
 public:
  GroupElement() = default;
  explicit GroupElement(std::vector<std::int64_t> coords) : coords_(std::move(coords)) {}
  GroupElement(std::initializer_list<std::int64_t> coords) : coords_(coords) {}

  static GroupElement zero(std::size_t rank) { return GroupElement(std::vector<std::int64_t>(rank, 0)); }

  std::size_t rank() const { return coords_.size(); }
  std::span<const std::int64_t> coords() const { return coords_; }
  std::int64_t operator[](std::size_t i) const { return coords_[i]; }
  bool is_zero() const;

  GroupElement& operator+=(const GroupElement& other);
  GroupElement& operator-=(const GroupElement& other);
  GroupElement operator-() const;

  friend GroupElement operator+(GroupElement a, const GroupElement& b) { return a += b; }
  friend GroupElement operator-(GroupElement a, const GroupElement& b) { return a -= b; }
  friend GroupElement operator*(std::int64_t k, const GroupElement& g);

  bool operator==(const GroupElement& other) const;
  std::strong_ordering operator<=>(const GroupElement& other) const;

 private:
  std::vector<std::int64_t> coords_;
};

std::strong_ordering lex_compare(const GroupElement& g, const GroupElement& h);

/// True iff g >= 0 in the lexicographic order.
bool in_positive_cone(const GroupElement& g);

std::string to_string(const GroupElement& g);

/// Parses "(1,-2)", "1 -2" or "1,-2".
GroupElement parse_group_element(const std::string& text);

/// A group element or -infinity (the degree of 0). -infinity is below every
/// group element and absorbs addition.
class Degree {
 public:
  Degree() = default;  // -infinity
  Degree(GroupElement g) : value_(std::move(g)) {}  // NOLINT: implicit by intent

  static Degree neg_inf() { return Degree(); }

  bool is_neg_inf() const { return !value_.has_value(); }
  const GroupElement& value() const;

  friend Degree operator+(const Degree& a, const Degree& b);

  bool operator==(const Degree& other) const;
  std::strong_ordering operator<=>(const Degree& other) const;

 private:
  std::optional<GroupElement> value_;
};

std::string to_string(const Degree& d);

/// Finite multiset of group elements with positive multiplicities.
class DegreeMultiset {
 public:
  DegreeMultiset() = default;

  void add(const GroupElement& g, std::int64_t multiplicity = 1);
  /// Removes one copy; throws DomainError if absent.
  void remove_one(const GroupElement& g);

  std::int64_t multiplicity(const GroupElement& g) const;
  std::int64_t total() const;
  bool empty() const { return entries_.empty(); }
  const std::map<GroupElement, std::int64_t>& entries() const { return entries_; }

  const GroupElement& min() const;
  const GroupElement& max() const;

  /// The multiset {d - e : e in D}.
  DegreeMultiset reflected(const GroupElement& d) const;

  bool operator==(const DegreeMultiset& other) const = default;

 private:
  std::map<GroupElement, std::int64_t> entries_;
};

/// Returns d with mult(e) == mult(d - e) for all e, if one exists. Only
/// d = min + max can work, so at most one value is ever returned.
std::optional<GroupElement> multiset_symmetry_witness(const DegreeMultiset& D);

}  // namespace frobex
