#include "frobex/qas.hpp"

#include <algorithm>
#include <memory>
#include <sstream>

namespace frobex {

namespace {

std::string monomial_name(const BasisIndex& idx, const std::vector<std::string>& names) {
  std::ostringstream out;
  bool any = false;
  for (std::size_t i = 0; i < idx.exps.size(); ++i) {
    if (idx.exps[i] == 0) continue;
    if (any) out << '*';
    any = true;
    out << names[i];
    if (idx.exps[i] > 1) out << '^' << idx.exps[i];
  }
  return any ? out.str() : "1";
}

std::vector<std::string> default_names(std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back("x" + std::to_string(i + 1));
  return names;
}

BasisIndex unit_vector(std::size_t n, std::size_t i, int scale = 1) {
  BasisIndex idx(std::vector<int>(n, 0));
  idx.exps[i] = scale;
  return idx;
}

}  // namespace

std::vector<BasisIndex> restricted_monomials(std::size_t n, std::uint64_t ell) {
  std::vector<BasisIndex> out;
  std::vector<int> cur(n, 0);
  const int top = static_cast<int>(ell);
  for (;;) {
    out.emplace_back(cur);
    std::size_t i = n;
    while (i > 0) {
      --i;
      if (++cur[i] < top) break;
      cur[i] = 0;
      if (i == 0) return out;
    }
    if (n == 0) return out;
  }
}

FreeDecomposition split_over_centre(const BasedAlgebra& A, std::uint64_t ell, const Element& y, std::size_t budget) {
  const RootField& F = A.field();
  const int L = static_cast<int>(ell);
  FreeDecomposition dec;
  Element rest = y;
  std::size_t steps = 0;
  while (!rest.is_zero()) {
    if (++steps > budget) throw ExtensionDefinitionError("centre splitting did not terminate");
    // Leading term: highest degree, then largest index.
    auto lead = rest.terms().begin();
    for (auto it = rest.terms().begin(); it != rest.terms().end(); ++it) {
      if (A.degree(it->first) > A.degree(lead->first) ||
          (A.degree(it->first) == A.degree(lead->first) && it->first > lead->first)) {
        lead = it;
      }
    }
    const BasisIndex e = lead->first;
    const Scalar c = lead->second;
    BasisIndex r = e, s = e;
    for (std::size_t i = 0; i < e.exps.size(); ++i) {
      r.exps[i] = e.exps[i] % L;
      s.exps[i] = e.exps[i] - r.exps[i];
    }
    Element product = A.multiply_basis(s, r);
    const Scalar c0 = product.coefficient(e);
    if (c0 == 0) {
      throw ExtensionDefinitionError("centre monomial times restricted monomial misses " + A.format(e));
    }
    const Scalar z = F.mul(c, F.inv(c0));
    dec.slots[r].add_term(F, s, z);
    if (dec.slots[r].is_zero()) dec.slots.erase(r);
    rest = combine(F, rest, product, 1, F.neg(z));
  }
  return dec;
}

Element reassemble(const BasedAlgebra& A, const FreeDecomposition& dec) {
  Element out;
  for (const auto& [r, z] : dec.slots) {
    out = combine(A.field(), out, A.multiply(z, Element::monomial(r)), 1, 1);
  }
  return out;
}

CentralFreeExtension centre_extension(const BasedAlgebra& A, std::uint64_t ell, bool with_form) {
  const std::size_t n = A.generators().size();
  const int L = static_cast<int>(ell);
  std::vector<BasisIndex> basis = restricted_monomials(n, ell);
  std::vector<BasisIndex> centre_gens;
  for (std::size_t i = 0; i < n; ++i) centre_gens.push_back(unit_vector(n, i, L));
  const BasisIndex top(std::vector<int>(n, L - 1));

  auto position = std::make_shared<std::map<BasisIndex, std::size_t>>();
  for (std::size_t k = 0; k < basis.size(); ++k) (*position)[basis[k]] = k;

  CentralFreeExtension E{.name = A.name() + " over its " + std::to_string(ell) + "-centre",
                         .ambient = A,
                         .in_subring =
                             [L](const BasisIndex& idx) {
                               return std::all_of(idx.exps.begin(), idx.exps.end(),
                                                  [L](int e) { return e % L == 0; });
                             },
                         .subring_generators = centre_gens,
                         .basis = basis};
  E.decompose = [A, ell, basis](const Element& y) {
    FreeDecomposition dec = split_over_centre(A, ell, y);
    std::vector<Element> coeffs;
    coeffs.reserve(basis.size());
    for (const auto& b : basis) {
      auto it = dec.slots.find(b);
      coeffs.push_back(it == dec.slots.end() ? Element{} : it->second);
    }
    return coeffs;
  };
  if (with_form) {
    E.form = [A, ell, top](const Element& y) {
      FreeDecomposition dec = split_over_centre(A, ell, y);
      auto it = dec.slots.find(top);
      return it == dec.slots.end() ? Element{} : it->second;
    };
  }
  const RootField F = A.field();
  E.evaluate = [F, L](const BasisIndex& s, std::span<const Scalar> point) {
    Scalar v = 1;
    for (std::size_t i = 0; i < s.exps.size(); ++i) v = F.mul(v, F.pow(point[i], static_cast<std::uint64_t>(s.exps[i] / L)));
    return v;
  };
  E.point_dimension = n;
  E.point_degree = [L](const BasisIndex& s) { return s.total() / L; };
  E.complement = [position, L](std::size_t i) -> std::optional<std::size_t> {
    for (const auto& [idx, k] : *position) {
      if (k != i) continue;
      BasisIndex c = idx;
      for (int& e : c.exps) e = L - 1 - e;
      auto it = position->find(c);
      if (it != position->end()) return it->second;
    }
    return std::nullopt;
  };
  E.word_of = [](const BasisIndex& idx) {
    std::vector<std::size_t> word;
    for (std::size_t i = 0; i < idx.exps.size(); ++i) word.insert(word.end(), static_cast<std::size_t>(idx.exps[i]), i);
    return word;
  };
  E.sample_total = 2 * L;
  return E;
}

QuantumAffineSpace::QuantumAffineSpace(RootField field, std::vector<std::vector<std::int64_t>> exponents,
                                       std::vector<GroupElement> degrees)
    : field_(field),
      exponents_(std::move(exponents)),
      degrees_(std::move(degrees)),
      algebra_(BasedAlgebra::Definition{.degree = [](const BasisIndex&) { return GroupElement{}; },
                                        .mul = [](const BasisIndex&, const BasisIndex&) { return Element{}; },
                                        .enumerate = [](int) { return std::vector<BasisIndex>{}; }}) {
  const std::size_t n = exponents_.size();
  if (n == 0) throw DomainError("quantum affine space needs at least one generator");
  if (degrees_.size() != n) throw DimensionError("one degree per generator is required");
  for (std::size_t i = 0; i < n; ++i) {
    if (exponents_[i].size() != n) throw DimensionError("commutation matrix must be square");
    if (exponents_[i][i] != 0) throw DomainError("commutation matrix must have zero diagonal");
    for (std::size_t j = 0; j < n; ++j) {
      if (exponents_[i][j] != -exponents_[j][i]) throw DomainError("commutation matrix must be antisymmetric");
    }
  }
  const std::size_t rank = degrees_.front().rank();
  bool proper = false;
  for (const auto& d : degrees_) {
    if (d.rank() != rank) throw DimensionError("generator degrees must share a rank");
    if (!in_positive_cone(d)) throw DomainError("generator degree " + to_string(d) + " is negative");
    proper = proper || !d.is_zero();
  }
  if (!proper) throw DomainError("generator degrees are all zero");

  // Captures copies: the algebra outlives moves of this object.
  const auto C = exponents_;
  const auto D = degrees_;
  const RootField F = field_;
  auto product = [C, F](const BasisIndex& a, const BasisIndex& b) {
    std::int64_t k = 0;
    for (std::size_t i = 0; i < C.size(); ++i) {
      for (std::size_t j = 0; j < i; ++j) k += C[i][j] * a.exps[i] * b.exps[j];
    }
    const auto ell = static_cast<std::int64_t>(F.ell());
    k %= ell;
    if (k < 0) k += ell;
    BasisIndex sum = a;
    for (std::size_t i = 0; i < sum.exps.size(); ++i) sum.exps[i] += b.exps[i];
    return MonomialProduct{k, sum};
  };
  const auto names = default_names(n);
  std::vector<BasisIndex> gens;
  for (std::size_t i = 0; i < n; ++i) gens.push_back(unit_vector(n, i));
  algebra_ = BasedAlgebra(BasedAlgebra::Definition{
      .name = "k_q[x1..x" + std::to_string(n) + "]",
      .field = F,
      .group_rank = rank,
      .unit = BasisIndex(std::vector<int>(n, 0)),
      .generators = gens,
      .mode = Filtration::graded,
      .degree =
          [D, rank](const BasisIndex& idx) {
            GroupElement g = GroupElement::zero(rank);
            for (std::size_t i = 0; i < D.size(); ++i) g += static_cast<std::int64_t>(idx.exps[i]) * D[i];
            return g;
          },
      .mul =
          [product, F](const BasisIndex& a, const BasisIndex& b) {
            MonomialProduct m = product(a, b);
            return Element::monomial(m.exps, F.zeta_pow(m.zeta_exponent));
          },
      .enumerate = [n](int total) { return exponent_vectors_up_to(n, total); },
      .namer = [names](const BasisIndex& idx) { return monomial_name(idx, names); },
  });
}

QuantumAffineSpace QuantumAffineSpace::from_presentation(const Presentation& pres, std::uint64_t seed) {
  if (!pres.ell) throw DomainError("presentation lacks [field] ell");
  if (!pres.straightening.empty()) throw DomainError("quantum affine space takes no straightening rules");
  if (pres.generators.empty()) throw DomainError("presentation lacks generators");
  const std::uint64_t p = pres.p.value_or(default_prime_for(*pres.ell));
  std::vector<GroupElement> degrees;
  for (const auto& g : pres.generators) degrees.push_back(g.degree);
  return QuantumAffineSpace(RootField::create(p, *pres.ell, seed), pres.commutation, degrees);
}

MonomialProduct QuantumAffineSpace::monomial_product(const BasisIndex& a, const BasisIndex& b) const {
  if (a.exps.size() != n() || b.exps.size() != n()) throw DimensionError("exponent vector of the wrong length");
  for (std::size_t i = 0; i < n(); ++i) {
    if (a.exps[i] < 0 || b.exps[i] < 0) throw DomainError("negative exponent");
  }
  Element prod = algebra_.multiply_basis(a, b);
  const auto& [idx, c] = *prod.terms().begin();
  std::int64_t k = 0;
  while (field_.zeta_pow(k) != c) ++k;
  return {k, idx};
}

FreeDecomposition QuantumAffineSpace::restricted_decompose(const Element& y) const {
  return split_over_centre(algebra_, ell(), y);
}

Element QuantumAffineSpace::reassemble(const FreeDecomposition& dec) const { return frobex::reassemble(algebra_, dec); }

Element QuantumAffineSpace::frobenius_form(const Element& y) const {
  const BasisIndex top(std::vector<int>(n(), static_cast<int>(ell()) - 1));
  FreeDecomposition dec = restricted_decompose(y);
  auto it = dec.slots.find(top);
  return it == dec.slots.end() ? Element{} : it->second;
}

GroupElement QuantumAffineSpace::form_degree() const {
  GroupElement g = GroupElement::zero(degrees_.front().rank());
  for (const auto& d : degrees_) g -= static_cast<std::int64_t>(ell() - 1) * d;
  return g;
}

DegreeMultiset QuantumAffineSpace::restricted_degrees() const {
  DegreeMultiset D;
  for (const auto& r : restricted_monomials(n(), ell())) D.add(algebra_.degree(r));
  return D;
}

CentralFreeExtension QuantumAffineSpace::extension() const { return centre_extension(algebra_, ell(), true); }

BasedAlgebra qweyl_new(std::uint64_t ell, const RootField& field) {
  if (ell < 2) throw DomainError("quantum Weyl fixture needs ell >= 2");
  if (field.ell() != ell) throw DomainError("field carries a root of unity of order " + std::to_string(field.ell()));
  const RootField F = field;
  const Scalar q = F.zeta();
  // x * (y^m x^n) = q^m y^m x^{n+1} + [m]_q y^{m-1} x^n
  auto left_x = [F, q](const Element& e) {
    Element out;
    for (const auto& [idx, c] : e.terms()) {
      const int m = idx.exps[0], n = idx.exps[1];
      out.add_term(F, BasisIndex{m, n + 1}, F.mul(c, F.pow(q, static_cast<std::uint64_t>(m))));
      if (m > 0) {
        Scalar qint = 0;
        for (int i = 0; i < m; ++i) qint = F.add(qint, F.pow(q, static_cast<std::uint64_t>(i)));
        out.add_term(F, BasisIndex{m - 1, n}, F.mul(c, qint));
      }
    }
    return out;
  };
  return BasedAlgebra(BasedAlgebra::Definition{
      .name = "quantum Weyl (ell=" + std::to_string(ell) + ")",
      .field = F,
      .group_rank = 1,
      .unit = BasisIndex{0, 0},
      .generators = {BasisIndex{1, 0}, BasisIndex{0, 1}},
      .mode = Filtration::filtered,
      .degree = [](const BasisIndex& idx) { return GroupElement{idx.exps[0] + idx.exps[1]}; },
      .mul =
          [F, left_x](const BasisIndex& a, const BasisIndex& b) {
            Element e = Element::monomial(b);
            for (int i = 0; i < a.exps[1]; ++i) e = left_x(e);
            Element out;
            for (const auto& [idx, c] : e.terms()) out.add_term(F, BasisIndex{idx.exps[0] + a.exps[0], idx.exps[1]}, c);
            return out;
          },
      .enumerate = [](int total) { return exponent_vectors_up_to(2, total); },
      .namer = [](const BasisIndex& idx) { return monomial_name(idx, {"y", "x"}); },
  });
}

QuantumAffineSpace qweyl_graded_plane(const RootField& field) {
  return QuantumAffineSpace(field, {{0, -1}, {1, 0}}, {GroupElement{1}, GroupElement{1}});
}

}  // namespace frobex
