#pragma once

// Sparse elements over an indexed monomial basis, and based algebras given
// by a multiplication oracle plus a degree function.

#include <compare>
#include <cstddef>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "frobex/field.hpp"
#include "frobex/grpdeg.hpp"

namespace frobex {

/// Raised when a multiplication oracle misbehaves (e.g. a rewrite runs out
/// of budget).
class AlgebraDefinitionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Exponent vector over the generators of a presentation.
struct BasisIndex {
  std::vector<int> exps;

  BasisIndex() = default;
  explicit BasisIndex(std::vector<int> e) : exps(std::move(e)) {}
  BasisIndex(std::initializer_list<int> e) : exps(e) {}

  int total() const;
  auto operator<=>(const BasisIndex&) const = default;
};

std::string to_string(const BasisIndex& idx);

/// Finite linear combination of basis indices; never stores zeros.
class Element {
 public:
  using Terms = std::map<BasisIndex, Scalar>;

  Element() = default;
  static Element monomial(const BasisIndex& idx, Scalar coeff = 1);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  Scalar coefficient(const BasisIndex& idx) const;

  /// this += c * idx (mod p).
  void add_term(const RootField& field, const BasisIndex& idx, Scalar c);

  bool operator==(const Element& other) const = default;

 private:
  Terms terms_;
};

/// lambda * a + mu * b.
Element combine(const RootField& field, const Element& a, const Element& b, Scalar lambda, Scalar mu);
Element scale(const RootField& field, const Element& a, Scalar lambda);

enum class Filtration { graded, filtered };

class BasedAlgebra {
 public:
  using MulOracle = std::function<Element(const BasisIndex&, const BasisIndex&)>;
  using DegreeFn = std::function<GroupElement(const BasisIndex&)>;
  /// Every basis index whose exponent total is at most the argument.
  using Enumerator = std::function<std::vector<BasisIndex>(int)>;
  using Namer = std::function<std::string(const BasisIndex&)>;

  struct Definition {
    std::string name;
    RootField field = RootField::create(2, 1);
    std::size_t group_rank = 1;
    BasisIndex unit;
    std::vector<BasisIndex> generators;
    Filtration mode = Filtration::graded;
    DegreeFn degree;
    MulOracle mul;
    Enumerator enumerate;
    Namer namer;  // optional
  };

  explicit BasedAlgebra(Definition def);

  const std::string& name() const { return def_.name; }
  const RootField& field() const { return def_.field; }
  std::size_t group_rank() const { return def_.group_rank; }
  Filtration mode() const { return def_.mode; }
  const BasisIndex& unit_index() const { return def_.unit; }
  const std::vector<BasisIndex>& generators() const { return def_.generators; }

  GroupElement degree(const BasisIndex& idx) const { return def_.degree(idx); }
  Element multiply_basis(const BasisIndex& a, const BasisIndex& b) const { return def_.mul(a, b); }
  Element multiply(const Element& a, const Element& b) const;
  std::vector<BasisIndex> enumerate(int max_total) const { return def_.enumerate(max_total); }

  Element one() const { return Element::monomial(def_.unit); }
  Element generator(std::size_t i) const { return Element::monomial(def_.generators.at(i)); }

  /// Max degree over the support; -infinity for zero.
  Degree filtered_degree(const Element& a) const;
  /// Terms of a of degree filtered_degree(a). Throws DomainError for zero.
  Element top_symbol(const Element& a) const;
  /// Terms of a lying in degree g exactly.
  Element homogeneous_part(const Element& a, const GroupElement& g) const;
  bool is_homogeneous(const Element& a) const;

  std::string format(const Element& a) const;
  std::string format(const BasisIndex& idx) const;

 private:
  Definition def_;
};

Element multiply(const BasedAlgebra& A, const Element& a, const Element& b);
Degree filtered_degree(const BasedAlgebra& A, const Element& a);
Element top_symbol(const BasedAlgebra& A, const Element& a);

/// Associated graded algebra: same basis and degrees, products truncated to
/// the degree sum.
BasedAlgebra gr_of(const BasedAlgebra& A);

/// Result of checking the structural invariants of an algebra on all basis
/// indices of exponent total up to a bound.
struct AlgebraAudit {
  bool unit_law = true;
  bool degree_rule = true;       // graded: exact additivity; filtered: submultiplicativity
  bool nonnegative = true;
  bool associative = true;
  std::size_t products_checked = 0;
  std::string first_failure;
  bool ok() const { return unit_law && degree_rule && nonnegative && associative; }
};

AlgebraAudit audit_algebra(const BasedAlgebra& A, int max_total);

/// Compares products u*v for all u, v with total(u) + total(v) <= max_total.
struct TableComparison {
  bool equal = true;
  std::size_t pairs_checked = 0;
  std::string first_mismatch;
};

TableComparison compare_product_tables(const BasedAlgebra& A, const BasedAlgebra& B, int max_total);

/// Exponent vectors of length n with entries >= 0 and sum <= max_total.
std::vector<BasisIndex> exponent_vectors_up_to(std::size_t n, int max_total);

}  // namespace frobex
