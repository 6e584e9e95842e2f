#include "frobex/rees.hpp"

#include <algorithm>

namespace frobex {

namespace {

BasisIndex encode(const BasisIndex& b, const GroupElement& g) {
  BasisIndex idx = b;
  for (auto c : g.coords()) idx.exps.push_back(static_cast<int>(c));
  return idx;
}

std::vector<GroupElement> box(const GroupElement& window) {
  std::vector<GroupElement> out;
  std::vector<std::int64_t> cur(window.rank(), 0);
  for (;;) {
    out.emplace_back(cur);
    std::size_t i = cur.size();
    bool carried = true;
    while (carried && i > 0) {
      --i;
      if (++cur[i] <= window[i]) {
        carried = false;
      } else {
        cur[i] = 0;
      }
    }
    if (carried) return out;
  }
}

}  // namespace

ReesAlgebra::ReesAlgebra(BasedAlgebra base, GroupElement window)
    : base_(std::move(base)),
      window_(std::move(window)),
      base_length_(base_.unit_index().exps.size()),
      algebra_(base_) {
  if (window_.rank() != base_.group_rank()) throw DimensionError("window rank differs from the grading group");
  if (!in_positive_cone(window_)) throw DomainError("window " + to_string(window_) + " is not in the positive cone");
  if (window_.rank() > 1) {
    for (auto c : window_.coords()) {
      if (c < 0) throw DomainError("window coordinates must be non-negative in rank > 1");
    }
  }
  for (const auto& x : base_.generators()) {
    if (!in_positive_cone(base_.degree(x))) throw DomainError("Rees algebra needs a non-negative filtration");
  }

  const BasedAlgebra A = base_;
  const std::size_t n = base_length_;
  const std::size_t rank = window_.rank();
  auto split_fn = [n](const BasisIndex& idx) {
    BasisIndex b(std::vector<int>(idx.exps.begin(), idx.exps.begin() + static_cast<std::ptrdiff_t>(n)));
    std::vector<std::int64_t> g(idx.exps.begin() + static_cast<std::ptrdiff_t>(n), idx.exps.end());
    return std::make_pair(b, GroupElement(std::move(g)));
  };
  std::vector<BasisIndex> gens;
  for (const auto& x : A.generators()) gens.push_back(encode(x, A.degree(x)));
  for (std::size_t j = 0; j < rank; ++j) {
    std::vector<std::int64_t> e(rank, 0);
    e[j] = 1;
    gens.push_back(encode(A.unit_index(), GroupElement(e)));
  }
  const auto degrees = window_degrees();
  algebra_ = BasedAlgebra(BasedAlgebra::Definition{
      .name = "Rees(" + A.name() + ")",
      .field = A.field(),
      .group_rank = rank,
      .unit = encode(A.unit_index(), GroupElement::zero(rank)),
      .generators = gens,
      .mode = Filtration::graded,
      .degree = [split_fn](const BasisIndex& idx) { return split_fn(idx).second; },
      .mul =
          [A, split_fn](const BasisIndex& u, const BasisIndex& v) {
            auto [b, g] = split_fn(u);
            auto [c, h] = split_fn(v);
            const GroupElement level = g + h;
            Element out;
            const Element prod = A.multiply_basis(b, c);
            for (const auto& [t, coeff] : prod.terms()) out.add_term(A.field(), encode(t, level), coeff);
            return out;
          },
      .enumerate =
          [A, degrees](int total) {
            std::vector<BasisIndex> out;
            for (const auto& b : A.enumerate(total)) {
              for (const auto& g : degrees) {
                if (A.degree(b) <= g) out.push_back(encode(b, g));
              }
            }
            std::sort(out.begin(), out.end());
            return out;
          },
      .namer =
          [A, split_fn](const BasisIndex& idx) {
            auto [b, g] = split_fn(idx);
            return "(" + A.format(b) + "; " + to_string(g) + ")";
          },
  });
}

bool ReesAlgebra::admissible(const BasisIndex& b, const GroupElement& g) const { return base_.degree(b) <= g; }

BasisIndex ReesAlgebra::index(const BasisIndex& b, const GroupElement& g) const {
  if (!admissible(b, g)) {
    throw DomainError(base_.format(b) + " of degree " + to_string(base_.degree(b)) + " does not lie in level " +
                      to_string(g));
  }
  return encode(b, g);
}

std::pair<BasisIndex, GroupElement> ReesAlgebra::split(const BasisIndex& idx) const {
  if (idx.exps.size() != base_length_ + window_.rank()) throw DimensionError("not a Rees basis index");
  BasisIndex b(std::vector<int>(idx.exps.begin(), idx.exps.begin() + static_cast<std::ptrdiff_t>(base_length_)));
  std::vector<std::int64_t> g(idx.exps.begin() + static_cast<std::ptrdiff_t>(base_length_), idx.exps.end());
  return {b, GroupElement(std::move(g))};
}

Element ReesAlgebra::embed(const Element& r, const GroupElement& g) const {
  Element out;
  for (const auto& [b, c] : r.terms()) out.add_term(base_.field(), index(b, g), c);
  return out;
}

Element ReesAlgebra::central(const GroupElement& h) const {
  if (!in_positive_cone(h)) throw DomainError("kP has no element in degree " + to_string(h));
  return Element::monomial(encode(base_.unit_index(), h));
}

std::vector<GroupElement> ReesAlgebra::window_degrees() const {
  if (window_.rank() == 1) {
    std::vector<GroupElement> out;
    for (std::int64_t g = 0; g <= window_[0]; ++g) out.push_back(GroupElement{g});
    return out;
  }
  return box(window_);
}

std::vector<BasisIndex> ReesAlgebra::enumerate_window(int max_total) const { return algebra_.enumerate(max_total); }

GroupElement default_window(const CentralFreeExtension& E) {
  GroupElement top = E.ambient.degree(E.basis.front());
  for (const auto& b : E.basis) top = std::max(top, E.ambient.degree(b));
  return 3 * top;
}

Element quotient_map(const ReesAlgebra& RA, CanonicalIdeal which, const Element& u) {
  const RootField& F = RA.base().field();
  Element out;
  for (const auto& [idx, c] : u.terms()) {
    auto [b, g] = RA.split(idx);
    if (which == CanonicalIdeal::m0 && RA.base().degree(b) != g) continue;
    out.add_term(F, b, c);
  }
  return out;
}

BasedAlgebra reduce_canonical(const ReesAlgebra& RA, CanonicalIdeal which) {
  const BasedAlgebra A = RA.base();
  const BasedAlgebra R = RA.algebra();
  auto lift = [A](const BasisIndex& b) { return encode(b, A.degree(b)); };
  const ReesAlgebra copy = RA;
  return BasedAlgebra(BasedAlgebra::Definition{
      .name = R.name() + (which == CanonicalIdeal::m0 ? " / m0" : " / m1"),
      .field = A.field(),
      .group_rank = A.group_rank(),
      .unit = A.unit_index(),
      .generators = A.generators(),
      .mode = which == CanonicalIdeal::m0 ? Filtration::graded : A.mode(),
      .degree = [A](const BasisIndex& b) { return A.degree(b); },
      .mul =
          [copy, R, lift, which](const BasisIndex& b, const BasisIndex& c) {
            return quotient_map(copy, which, R.multiply_basis(lift(b), lift(c)));
          },
      .enumerate = [A](int total) { return A.enumerate(total); },
      .namer = [A](const BasisIndex& b) { return A.format(b); },
  });
}

Element reduce_at_cone_point(const ReesAlgebra& RA, const std::vector<Scalar>& tau, const Element& u) {
  const RootField& F = RA.base().field();
  if (tau.size() != RA.window().rank()) throw DimensionError("cone point needs one coordinate per group rank");
  for (Scalar t : tau) {
    if (t % F.p() == 0) throw DomainError("cone point coordinates must be nonzero; use m0 for the origin");
  }
  Element out;
  for (const auto& [idx, c] : u.terms()) {
    auto [b, g] = RA.split(idx);
    Scalar w = c;
    for (std::size_t j = 0; j < tau.size(); ++j) {
      const Scalar base = g[j] >= 0 ? tau[j] : F.inv(tau[j]);
      w = F.mul(w, F.pow(base, static_cast<std::uint64_t>(g[j] >= 0 ? g[j] : -g[j])));
    }
    out.add_term(F, b, w);
  }
  return out;
}

HomomorphismCheck check_quotient_homomorphism(const ReesAlgebra& RA, const BasedAlgebra& target,
                                              const std::function<Element(const Element&)>& chi, int max_total) {
  HomomorphismCheck check;
  const BasedAlgebra& R = RA.algebra();
  const auto pool = RA.enumerate_window(max_total);
  for (const auto& u : pool) {
    const auto [bu, gu] = RA.split(u);
    for (const auto& v : pool) {
      const auto [bv, gv] = RA.split(v);
      if (bu.total() + bv.total() > max_total) continue;
      ++check.pairs_checked;
      const Element mu = Element::monomial(u), mv = Element::monomial(v);
      const Element lhs = chi(R.multiply(mu, mv));
      const Element rhs = target.multiply(chi(mu), chi(mv));
      if (lhs != rhs && check.ok) {
        check.ok = false;
        check.first_failure = R.format(u) + " * " + R.format(v) + ": " + target.format(lhs) + " vs " + target.format(rhs);
      }
    }
  }
  return check;
}

Element rees_form(const ReesAlgebra& RA, const Form& phi, const GroupElement& d, const Element& u) {
  const RootField& F = RA.base().field();
  Element out;
  for (const auto& [idx, c] : u.terms()) {
    auto [b, g] = RA.split(idx);
    const GroupElement level = g + d;
    const Element value = phi(Element::monomial(b));
    for (const auto& [s, coeff] : value.terms()) {
      if (!RA.admissible(s, level)) {
        throw DomainError("form value " + RA.base().format(s) + " escapes level " + to_string(level) +
                          ": the form does not have filtered degree " + to_string(d));
      }
      out.add_term(F, encode(s, level), F.mul(c, coeff));
    }
  }
  return out;
}

CentralFreeExtension rees_extension(const ReesAlgebra& RA, const CentralFreeExtension& E, const GroupElement& d) {
  if (!E.form) throw ExtensionDefinitionError("Rees extension needs a form on the base extension");
  const BasedAlgebra A = E.ambient;
  const std::size_t rank = RA.window().rank();
  const std::size_t n = RA.base_length();

  std::vector<BasisIndex> basis;
  for (const auto& b : E.basis) basis.push_back(encode(b, A.degree(b)));
  std::vector<BasisIndex> gens;
  for (const auto& s : E.subring_generators) gens.push_back(encode(s, A.degree(s)));
  for (std::size_t j = 0; j < rank; ++j) {
    std::vector<std::int64_t> e(rank, 0);
    e[j] = 1;
    gens.push_back(encode(A.unit_index(), GroupElement(e)));
  }
  auto split_fn = [n](const BasisIndex& idx) {
    BasisIndex b(std::vector<int>(idx.exps.begin(), idx.exps.begin() + static_cast<std::ptrdiff_t>(n)));
    std::vector<std::int64_t> g(idx.exps.begin() + static_cast<std::ptrdiff_t>(n), idx.exps.end());
    return std::make_pair(b, GroupElement(std::move(g)));
  };

  const auto in_base_subring = E.in_subring;
  CentralFreeExtension R{.name = "Rees of " + E.name,
                         .ambient = RA.algebra(),
                         .in_subring = [in_base_subring, split_fn](const BasisIndex& idx) {
                           return in_base_subring(split_fn(idx).first);
                         },
                         .subring_generators = gens,
                         .basis = basis};
  const auto base_basis = E.basis;
  const auto decompose = E.decompose;
  R.decompose = [A, base_basis, decompose, split_fn](const Element& y) {
    std::vector<Element> coeffs(base_basis.size());
    for (const auto& [idx, c] : y.terms()) {
      auto [r, g] = split_fn(idx);
      const auto z = decompose(Element::monomial(r, c));
      for (std::size_t k = 0; k < base_basis.size(); ++k) {
        const GroupElement level = g - A.degree(base_basis[k]);
        for (const auto& [s, sc] : z[k].terms()) {
          if (!(A.degree(s) <= level)) {
            throw ExtensionDefinitionError("base decomposition is not free-filtered at " + A.format(r));
          }
          coeffs[k].add_term(A.field(), encode(s, level), sc);
        }
      }
    }
    return coeffs;
  };
  const ReesAlgebra copy = RA;
  const Form phi = E.form;
  R.form = [copy, phi, d](const Element& y) { return rees_form(copy, phi, d, y); };
  const auto evaluate = E.evaluate;
  const std::size_t base_points = E.point_dimension;
  const RootField F = A.field();
  if (evaluate) {
    R.evaluate = [evaluate, base_points, split_fn, F](const BasisIndex& idx, std::span<const Scalar> point) {
      auto [s, g] = split_fn(idx);
      Scalar v = evaluate(s, point.subspan(0, base_points));
      for (std::size_t j = 0; j < g.rank(); ++j) {
        if (g[j] < 0) throw UnsupportedError("evaluation needs non-negative levels");
        v = F.mul(v, F.pow(point[base_points + j], static_cast<std::uint64_t>(g[j])));
      }
      return v;
    };
  }
  R.point_dimension = base_points + rank;
  const auto point_degree = E.point_degree;
  if (point_degree) {
    R.point_degree = [point_degree, split_fn](const BasisIndex& idx) {
      auto [s, g] = split_fn(idx);
      int total = point_degree(s);
      for (auto c : g.coords()) total += static_cast<int>(c);
      return total;
    };
  }
  R.complement = E.complement;
  R.sample_total = E.sample_total;
  return R;
}

}  // namespace frobex
