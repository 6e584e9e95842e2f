#include <random>
#include <sstream>

#include <gtest/gtest.h>

#include "frobex/qas.hpp"
#include "frobex/report.hpp"
#include "../oracles.hpp"

using namespace frobex;

namespace {

std::vector<GroupElement> unit_degrees(std::size_t n) { return std::vector<GroupElement>(n, GroupElement({1})); }

}  // namespace

TEST(QuantumAffineSpace, ClosedFormMatchesBubbleSort) {
  const auto F = RootField::create(103, 3);
  const std::vector<std::vector<std::int64_t>> C = {{0, 1, 2}, {-1, 0, 2}, {-2, -2, 0}};
  const QuantumAffineSpace Q(F, C, unit_degrees(3));
  const auto monomials = exponent_vectors_up_to(3, 4);
  for (const auto& a : monomials) {
    for (const auto& b : monomials) {
      const auto [k, e] = oracle::qas_product(C, 3, a.exps, b.exps);
      const MonomialProduct mp = Q.monomial_product(a, b);
      EXPECT_EQ(mp.zeta_exponent, k);
      EXPECT_EQ(mp.exps.exps, e);
      EXPECT_EQ(Q.algebra().multiply_basis(a, b), Element::monomial(BasisIndex(e), F.zeta_pow(k)));
    }
  }
}

TEST(QuantumAffineSpace, RejectsBadInput) {
  const auto F = RootField::create(103, 3);
  EXPECT_THROW(QuantumAffineSpace(F, {{0, 1}, {1, 0}}, unit_degrees(2)), DomainError);
  EXPECT_THROW(QuantumAffineSpace(F, {{1, 1}, {-1, 0}}, unit_degrees(2)), DomainError);
  EXPECT_THROW(QuantumAffineSpace(F, {{0, 1}, {-1, 0}}, unit_degrees(3)), DimensionError);
  EXPECT_THROW(QuantumAffineSpace(F, {{0, 1}, {-1, 0}}, {GroupElement({0}), GroupElement({0})}), DomainError);
  EXPECT_THROW(QuantumAffineSpace(F, {{0, 1}, {-1, 0}}, {GroupElement({1}), GroupElement({-1})}), DomainError);
  EXPECT_THROW(QuantumAffineSpace(F, {}, {}), DomainError);
}

TEST(QuantumAffineSpace, RestrictedDecompositionRoundTrip) {
  const auto F = RootField::create(103, 3);
  const QuantumAffineSpace Q(F, {{0, 1}, {-1, 0}}, {GroupElement({1, 0}), GroupElement({0, 1})});
  std::mt19937_64 rng(5);
  const auto monomials = exponent_vectors_up_to(2, 8);
  for (int trial = 0; trial < 50; ++trial) {
    Element y;
    for (int t = 0; t < 4; ++t) y.add_term(F, monomials[rng() % monomials.size()], 1 + rng() % 102);
    const FreeDecomposition dec = Q.restricted_decompose(y);
    EXPECT_EQ(Q.reassemble(dec), y);
    for (const auto& [r, s] : dec.slots) {
      for (const auto& e : r.exps) EXPECT_LT(e, 3);
      for (const auto& [idx, c] : s.terms())
        for (int e : idx.exps) EXPECT_EQ(e % 3, 0);
    }
  }
}

TEST(QuantumAffineSpace, FormPicksTheTopSlot) {
  const auto F = RootField::create(103, 3);
  const QuantumAffineSpace Q(F, {{0, 1}, {-1, 0}}, unit_degrees(2));
  EXPECT_EQ(Q.frobenius_form(Element::monomial(BasisIndex{2, 2})), Q.algebra().one());
  EXPECT_TRUE(Q.frobenius_form(Element::monomial(BasisIndex{1, 2})).is_zero());
  const Element top = Q.frobenius_form(Element::monomial(BasisIndex{5, 2}));
  EXPECT_EQ(top, Element::monomial(BasisIndex{3, 0}));
  EXPECT_EQ(Q.form_degree(), GroupElement({-4}));
}

TEST(QuantumAffineSpace, RestrictedDegreesAndCount) {
  const auto F = RootField::create(101, 2);
  const QuantumAffineSpace Q(F, {{0, 1, 0}, {-1, 0, 1}, {0, -1, 0}},
                             {GroupElement({1, 0}), GroupElement({0, 2}), GroupElement({1, 1})});
  EXPECT_EQ(restricted_monomials(3, 2).size(), 8u);
  const DegreeMultiset D = Q.restricted_degrees();
  EXPECT_EQ(D.total(), 8);
  EXPECT_EQ(D.max(), GroupElement({2, 3}));
  EXPECT_EQ(multiset_symmetry_witness(D), GroupElement({2, 3}));
  EXPECT_EQ(basis_degrees(Q.extension()), D);
}

TEST(QuantumAffineSpace, FromPresentation) {
  std::istringstream in(
      "[field]\np = 7\nell = 3\n[generators]\nx1 = 1\nx2 = 1\n[relations]\nx1 x2 = 1\n");
  const Presentation pres = parse_presentation(in);
  const auto Q = QuantumAffineSpace::from_presentation(pres);
  EXPECT_EQ(Q.n(), 2u);
  EXPECT_EQ(Q.field().p(), 7u);
  EXPECT_EQ(Q.exponents()[0][1], 1);
  EXPECT_EQ(Q.exponents()[1][0], -1);
}

TEST(QuantumWeyl, CentreSplittingRoundTrip) {
  const auto F = RootField::create(103, 3);
  const BasedAlgebra W = qweyl_new(3, F);
  std::mt19937_64 rng(9);
  const auto monomials = W.enumerate(9);
  for (int trial = 0; trial < 40; ++trial) {
    Element y;
    for (int t = 0; t < 3; ++t) y.add_term(F, monomials[rng() % monomials.size()], 1 + rng() % 102);
    EXPECT_EQ(reassemble(W, split_over_centre(W, 3, y)), y);
  }
  EXPECT_THROW(qweyl_new(2, F), DomainError);
  EXPECT_THROW(qweyl_new(1, RootField::create(101, 1)), DomainError);
}

TEST(RandomAntisymmetric, IsAntisymmetricAndSeeded) {
  const auto C = random_antisymmetric(4, 5, 17);
  EXPECT_EQ(C, random_antisymmetric(4, 5, 17));
  for (std::size_t i = 0; i < 4; ++i) {
    EXPECT_EQ(C[i][i], 0);
    for (std::size_t j = 0; j < 4; ++j) EXPECT_EQ(C[i][j], -C[j][i]);
  }
}
