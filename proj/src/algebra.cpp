#include "frobex/algebra.hpp"

#include <numeric>
#include <sstream>

namespace frobex {

int BasisIndex::total() const { return std::accumulate(exps.begin(), exps.end(), 0); }

std::string to_string(const BasisIndex& idx) {
  std::ostringstream out;
  out << '[';
  for (std::size_t i = 0; i < idx.exps.size(); ++i) {
    if (i) out << ',';
    out << idx.exps[i];
  }
  out << ']';
  return out.str();
}

Element Element::monomial(const BasisIndex& idx, Scalar coeff) {
  Element e;
  if (coeff != 0) e.terms_.emplace(idx, coeff);
  return e;
}

Scalar Element::coefficient(const BasisIndex& idx) const {
  auto it = terms_.find(idx);
  return it == terms_.end() ? 0 : it->second;
}

void Element::add_term(const RootField& field, const BasisIndex& idx, Scalar c) {
  c %= field.p();
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(idx, c);
  if (inserted) return;
  it->second = field.add(it->second, c);
  if (it->second == 0) terms_.erase(it);
}

Element combine(const RootField& field, const Element& a, const Element& b, Scalar lambda, Scalar mu) {
  Element out;
  for (const auto& [idx, c] : a.terms()) out.add_term(field, idx, field.mul(c, lambda));
  for (const auto& [idx, c] : b.terms()) out.add_term(field, idx, field.mul(c, mu));
  return out;
}

Element scale(const RootField& field, const Element& a, Scalar lambda) {
  return combine(field, a, Element{}, lambda, 0);
}

BasedAlgebra::BasedAlgebra(Definition def) : def_(std::move(def)) {
  if (!def_.degree || !def_.mul || !def_.enumerate) {
    throw AlgebraDefinitionError("algebra '" + def_.name + "' is missing a degree, product or enumerator");
  }
}

Element BasedAlgebra::multiply(const Element& a, const Element& b) const {
  const RootField& F = field();
  Element out;
  for (const auto& [ia, ca] : a.terms()) {
    for (const auto& [ib, cb] : b.terms()) {
      Scalar c = F.mul(ca, cb);
      const Element prod = def_.mul(ia, ib);
      for (const auto& [ip, cp] : prod.terms()) out.add_term(F, ip, F.mul(c, cp));
    }
  }
  return out;
}

Degree BasedAlgebra::filtered_degree(const Element& a) const {
  Degree best = Degree::neg_inf();
  for (const auto& [idx, c] : a.terms()) {
    Degree d = degree(idx);
    if (d > best) best = d;
  }
  return best;
}

Element BasedAlgebra::homogeneous_part(const Element& a, const GroupElement& g) const {
  Element out;
  for (const auto& [idx, c] : a.terms()) {
    if (degree(idx) == g) out.add_term(field(), idx, c);
  }
  return out;
}

Element BasedAlgebra::top_symbol(const Element& a) const {
  if (a.is_zero()) throw DomainError("top symbol of zero");
  return homogeneous_part(a, filtered_degree(a).value());
}

bool BasedAlgebra::is_homogeneous(const Element& a) const {
  if (a.is_zero()) return true;
  return homogeneous_part(a, filtered_degree(a).value()) == a;
}

std::string BasedAlgebra::format(const BasisIndex& idx) const {
  if (def_.namer) return def_.namer(idx);
  return "e" + to_string(idx);
}

std::string BasedAlgebra::format(const Element& a) const {
  if (a.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [idx, c] : a.terms()) {
    if (!first) out << " + ";
    first = false;
    out << c << '*' << format(idx);
  }
  return out.str();
}

Element multiply(const BasedAlgebra& A, const Element& a, const Element& b) { return A.multiply(a, b); }
Degree filtered_degree(const BasedAlgebra& A, const Element& a) { return A.filtered_degree(a); }
Element top_symbol(const BasedAlgebra& A, const Element& a) { return A.top_symbol(a); }

BasedAlgebra gr_of(const BasedAlgebra& A) {
  BasedAlgebra::Definition def{
      .name = "gr " + A.name(),
      .field = A.field(),
      .group_rank = A.group_rank(),
      .unit = A.unit_index(),
      .generators = A.generators(),
      .mode = Filtration::graded,
      .degree = [A](const BasisIndex& idx) { return A.degree(idx); },
      .mul =
          [A](const BasisIndex& a, const BasisIndex& b) {
            return A.homogeneous_part(A.multiply_basis(a, b), A.degree(a) + A.degree(b));
          },
      .enumerate = [A](int n) { return A.enumerate(n); },
      .namer = [A](const BasisIndex& idx) { return A.format(idx); },
  };
  return BasedAlgebra(std::move(def));
}

AlgebraAudit audit_algebra(const BasedAlgebra& A, int max_total) {
  AlgebraAudit audit;
  auto fail = [&](bool& flag, const std::string& what) {
    flag = false;
    if (audit.first_failure.empty()) audit.first_failure = what;
  };
  const auto basis = A.enumerate(max_total);
  const GroupElement zero = GroupElement::zero(A.group_rank());
  const Element one = A.one();
  for (const auto& u : basis) {
    Element mu = Element::monomial(u);
    if (!in_positive_cone(A.degree(u))) fail(audit.nonnegative, "negative degree at " + A.format(u));
    if (A.multiply(one, mu) != mu || A.multiply(mu, one) != mu) fail(audit.unit_law, "unit law at " + A.format(u));
  }
  for (const auto& u : basis) {
    for (const auto& v : basis) {
      if (u.total() + v.total() > max_total) continue;
      ++audit.products_checked;
      Element uv = A.multiply_basis(u, v);
      GroupElement target = A.degree(u) + A.degree(v);
      for (const auto& [t, c] : uv.terms()) {
        bool bad = A.mode() == Filtration::graded ? !(A.degree(t) == target) : A.degree(t) > target;
        if (bad) fail(audit.degree_rule, "degree rule at " + A.format(u) + " * " + A.format(v));
      }
      for (const auto& w : basis) {
        if (u.total() + v.total() + w.total() > max_total) continue;
        Element mw = Element::monomial(w);
        Element left = A.multiply(uv, mw);
        Element right = A.multiply(Element::monomial(u), A.multiply_basis(v, w));
        if (left != right) {
          fail(audit.associative, "associativity at " + A.format(u) + ", " + A.format(v) + ", " + A.format(w));
        }
      }
    }
  }
  return audit;
}

TableComparison compare_product_tables(const BasedAlgebra& A, const BasedAlgebra& B, int max_total) {
  TableComparison cmp;
  const auto basis = A.enumerate(max_total);
  if (basis != B.enumerate(max_total)) {
    cmp.equal = false;
    cmp.first_mismatch = "bases differ";
    return cmp;
  }
  for (const auto& u : basis) {
    for (const auto& v : basis) {
      if (u.total() + v.total() > max_total) continue;
      ++cmp.pairs_checked;
      Element a = A.multiply_basis(u, v);
      Element b = B.multiply_basis(u, v);
      if (a != b && cmp.equal) {
        cmp.equal = false;
        cmp.first_mismatch = A.format(u) + " * " + A.format(v) + ": " + A.format(a) + " vs " + B.format(b);
      }
    }
  }
  return cmp;
}

std::vector<BasisIndex> exponent_vectors_up_to(std::size_t n, int max_total) {
  std::vector<BasisIndex> out;
  std::vector<int> cur(n, 0);
  std::function<void(std::size_t, int)> rec = [&](std::size_t i, int left) {
    if (i == n) {
      out.emplace_back(cur);
      return;
    }
    for (int e = 0; e <= left; ++e) {
      cur[i] = e;
      rec(i + 1, left - e);
    }
    cur[i] = 0;
  };
  rec(0, max_total);
  return out;
}

}  // namespace frobex
