#pragma once

// Quantum affine space k_q[x_1..x_n] at a root of unity over its ell-centre,
// the quantum Weyl fixture, and the ell-centre splitting shared by both.

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "frobex/algebra.hpp"
#include "frobex/config.hpp"
#include "frobex/frobenius.hpp"

namespace frobex {

/// Coefficients over the restricted monomials: y = sum_r slots[r] * x^r,
/// every slot supported on ell-centre monomials.
struct FreeDecomposition {
  std::map<BasisIndex, Element> slots;
};

/// Exponent vectors in [0, ell)^n, lexicographic.
std::vector<BasisIndex> restricted_monomials(std::size_t n, std::uint64_t ell);

/// Splits y over the ell-centre of an algebra on normal-ordered monomials:
/// each monomial x^e is peeled as (x^{ell s}) * x^r with e = r + ell s.
/// Requires x^{ell s} * x^r to contain x^e with a nonzero coefficient.
FreeDecomposition split_over_centre(const BasedAlgebra& A, std::uint64_t ell, const Element& y,
                                    std::size_t budget = 1'000'000);
Element reassemble(const BasedAlgebra& A, const FreeDecomposition& dec);

/// The extension Z_0 ⊆ A for an algebra on normal-ordered monomials whose
/// ell-th generator powers are central. If with_form, the form is the
/// projection onto the slot (ell-1, ..., ell-1).
CentralFreeExtension centre_extension(const BasedAlgebra& A, std::uint64_t ell, bool with_form = true);

struct MonomialProduct {
  std::int64_t zeta_exponent = 0;  // reduced mod ell
  BasisIndex exps;
};

class QuantumAffineSpace {
 public:
  /// exponents[i][j] = e with x_i x_j = zeta^e x_j x_i (antisymmetric, zero
  /// diagonal); degrees in the positive cone, not all zero.
  QuantumAffineSpace(RootField field, std::vector<std::vector<std::int64_t>> exponents,
                     std::vector<GroupElement> degrees);

  static QuantumAffineSpace from_presentation(const Presentation& pres, std::uint64_t seed = kDefaultSeed);

  std::size_t n() const { return exponents_.size(); }
  std::uint64_t ell() const { return field_.ell(); }
  const RootField& field() const { return field_; }
  const std::vector<std::vector<std::int64_t>>& exponents() const { return exponents_; }
  const std::vector<GroupElement>& degrees() const { return degrees_; }
  const BasedAlgebra& algebra() const { return algebra_; }

  /// x^a x^b = zeta^k x^{a+b}, k = sum_{i>j} C[i][j] a_i b_j.
  MonomialProduct monomial_product(const BasisIndex& a, const BasisIndex& b) const;

  FreeDecomposition restricted_decompose(const Element& y) const;
  Element reassemble(const FreeDecomposition& dec) const;
  /// Coefficient of x^{ell-1, ..., ell-1} in the restricted decomposition.
  Element frobenius_form(const Element& y) const;
  /// -sum (ell-1) d_i.
  GroupElement form_degree() const;
  /// {sum a_i d_i : 0 <= a_i < ell}.
  DegreeMultiset restricted_degrees() const;

  CentralFreeExtension extension() const;

 private:
  RootField field_;
  std::vector<std::vector<std::int64_t>> exponents_;
  std::vector<GroupElement> degrees_;
  BasedAlgebra algebra_;
};

/// Filtered algebra on y^a x^b (index [a, b]) with x y = q y x + 1, filtered
/// by total degree in Z. Requires ell >= 2 and field.ell() == ell.
BasedAlgebra qweyl_new(std::uint64_t ell, const RootField& field);

/// The quantum plane that gr of the Weyl fixture should be: generators
/// x1 = y, x2 = x of degree 1 with x2 x1 = q x1 x2.
QuantumAffineSpace qweyl_graded_plane(const RootField& field);

}  // namespace frobex
