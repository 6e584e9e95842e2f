#pragma once

// Rees algebras of non-negatively filtered based algebras, truncated to a
// degree window for enumeration, with the quotients at the cone points.

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "frobex/algebra.hpp"
#include "frobex/frobenius.hpp"

namespace frobex {

/// Basis indices are pairs (b, g) with deg b <= g, encoded as the exponent
/// vector of b followed by the coordinates of g. The product is
/// (b, g)(c, h) = sum over terms t of bc of (t, g + h), and deg (b, g) = g.
///
/// The window bounds enumeration only. For rank-one groups it selects
/// 0 <= g <= window; for higher rank the box 0 <= g_i <= window_i.
class ReesAlgebra {
 public:
  ReesAlgebra(BasedAlgebra base, GroupElement window);

  const BasedAlgebra& base() const { return base_; }
  const GroupElement& window() const { return window_; }
  const BasedAlgebra& algebra() const { return algebra_; }
  std::size_t base_length() const { return base_length_; }

  bool admissible(const BasisIndex& b, const GroupElement& g) const;
  /// Throws DomainError unless deg b <= g.
  BasisIndex index(const BasisIndex& b, const GroupElement& g) const;
  std::pair<BasisIndex, GroupElement> split(const BasisIndex& idx) const;

  /// r placed in filtration level g (every term must satisfy deg <= g).
  Element embed(const Element& r, const GroupElement& g) const;
  /// The central element (1, h) of kP.
  Element central(const GroupElement& h) const;

  /// Group elements 0 <= g <= window in the enumeration order.
  std::vector<GroupElement> window_degrees() const;
  /// Admissible (b, g) with g in the window and total(b) <= max_total.
  std::vector<BasisIndex> enumerate_window(int max_total) const;

 private:
  BasedAlgebra base_;
  GroupElement window_;
  std::size_t base_length_ = 0;
  BasedAlgebra algebra_;
};

/// Largest basis degree of an extension, times three.
GroupElement default_window(const CentralFreeExtension& E);

enum class CanonicalIdeal { m0, m1 };

/// m0: (b, g) -> b if deg b == g, else 0, landing in gr of the base.
/// m1: (b, g) -> b, landing in the base.
Element quotient_map(const ReesAlgebra& RA, CanonicalIdeal which, const Element& u);

/// The quotient algebra carried on the base basis through the section
/// b -> (b, deg b): b * c := quotient of (b, deg b)(c, deg c).
BasedAlgebra reduce_canonical(const ReesAlgebra& RA, CanonicalIdeal which);

/// (b, g) -> prod_j tau_j^{g_j} b, for a cone point with nonzero coordinates.
Element reduce_at_cone_point(const ReesAlgebra& RA, const std::vector<Scalar>& tau, const Element& u);

struct HomomorphismCheck {
  bool ok = true;
  std::size_t pairs_checked = 0;
  std::string first_failure;
};

/// chi(uv) == chi(u) chi(v) for all window pairs (u, v) with base totals
/// summing to at most max_total, products taken in `target`.
HomomorphismCheck check_quotient_homomorphism(const ReesAlgebra& RA, const BasedAlgebra& target,
                                              const std::function<Element(const Element&)>& chi, int max_total);

/// (r, g) -> (Phi(r), g + d). Throws DomainError if a value is not admissible,
/// which means Phi does not have filtered degree d.
Element rees_form(const ReesAlgebra& RA, const Form& phi, const GroupElement& d, const Element& u);

/// Rees(S) in Rees(R) for a filtered extension S in R carrying a form of
/// filtered degree d. Basis (b, deg b); subring generated by (s, deg s) and
/// the cone generators (1, e_j).
CentralFreeExtension rees_extension(const ReesAlgebra& RA, const CentralFreeExtension& E, const GroupElement& d);

}  // namespace frobex
