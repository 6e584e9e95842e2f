#include <gtest/gtest.h>

#include "frobex/qas.hpp"
#include "frobex/rees.hpp"

using namespace frobex;

namespace {

struct WeylFixture {
  RootField F = RootField::create(101, 2);
  BasedAlgebra W = qweyl_new(2, F);
  QuantumAffineSpace plane = qweyl_graded_plane(F);
  CentralFreeExtension graded = plane.extension();
  CentralFreeExtension filtered = lift_form(centre_extension(W, 2, false), graded, 6);
};

}  // namespace

TEST(ReesAlgebra, IndexingAndCentralElements) {
  WeylFixture fx;
  const ReesAlgebra RA(fx.W, GroupElement({4}));
  const BasisIndex yx{1, 1};
  EXPECT_TRUE(RA.admissible(yx, GroupElement({2})));
  EXPECT_FALSE(RA.admissible(yx, GroupElement({1})));
  EXPECT_THROW((void)RA.index(yx, GroupElement({1})), DomainError);
  const BasisIndex idx = RA.index(yx, GroupElement({3}));
  EXPECT_EQ(RA.split(idx).first, yx);
  EXPECT_EQ(RA.split(idx).second, GroupElement({3}));
  EXPECT_EQ(RA.algebra().degree(idx), GroupElement({3}));

  const Element t = RA.central(GroupElement({1}));
  for (const auto& u : RA.enumerate_window(3)) {
    const Element e = Element::monomial(u);
    EXPECT_EQ(RA.algebra().multiply(t, e), RA.algebra().multiply(e, t));
  }
}

TEST(ReesAlgebra, AuditAndGradedness) {
  WeylFixture fx;
  const ReesAlgebra RA(fx.W, GroupElement({4}));
  EXPECT_EQ(RA.algebra().mode(), Filtration::graded);
  const AlgebraAudit audit = audit_algebra(RA.algebra(), 3);
  EXPECT_TRUE(audit.ok()) << audit.first_failure;
  EXPECT_EQ(RA.window_degrees().size(), 5u);
}

TEST(ReesAlgebra, CanonicalQuotients) {
  WeylFixture fx;
  const ReesAlgebra RA(fx.W, GroupElement({6}));
  const TableComparison m0 = compare_product_tables(reduce_canonical(RA, CanonicalIdeal::m0), gr_of(fx.W), 6);
  const TableComparison m1 = compare_product_tables(reduce_canonical(RA, CanonicalIdeal::m1), fx.W, 6);
  EXPECT_TRUE(m0.equal) << m0.first_mismatch;
  EXPECT_TRUE(m1.equal) << m1.first_mismatch;

  const BasisIndex x{0, 1};
  const Element lifted = Element::monomial(RA.index(x, GroupElement({3})));
  EXPECT_TRUE(quotient_map(RA, CanonicalIdeal::m0, lifted).is_zero());
  EXPECT_EQ(quotient_map(RA, CanonicalIdeal::m1, lifted), Element::monomial(x));
  EXPECT_EQ(reduce_at_cone_point(RA, {2}, lifted), Element::monomial(x, 8));

  const BasedAlgebra grW = gr_of(fx.W);
  const auto hom = check_quotient_homomorphism(
      RA, grW, [&RA](const Element& u) { return quotient_map(RA, CanonicalIdeal::m0, u); }, 4);
  EXPECT_TRUE(hom.ok) << hom.first_failure;
  const auto tau = check_quotient_homomorphism(
      RA, fx.W, [&RA](const Element& u) { return reduce_at_cone_point(RA, {3}, u); }, 4);
  EXPECT_TRUE(tau.ok) << tau.first_failure;
}

TEST(ReesAlgebra, FormEscapeIsDetected) {
  WeylFixture fx;
  const ReesAlgebra RA(fx.W, GroupElement({6}));
  const Element u = Element::monomial(RA.index(BasisIndex{1, 1}, GroupElement({2})));
  EXPECT_NO_THROW((void)rees_form(RA, fx.filtered.form, GroupElement({-2}), u));
  EXPECT_THROW((void)rees_form(RA, fx.filtered.form, GroupElement({-3}), u), DomainError);
}

TEST(ReesAlgebra, ReesExtensionIsFrobenius) {
  WeylFixture fx;
  const auto filtered_cert = verify_frobenius(fx.filtered);
  ASSERT_EQ(filtered_cert.verdict, Verdict::frobenius);
  const ReesAlgebra RA(fx.W, default_window(fx.filtered));
  EXPECT_EQ(RA.window(), GroupElement({6}));
  const auto E = rees_extension(RA, fx.filtered, *filtered_cert.phi_degree);
  const auto cert = verify_frobenius(E);
  EXPECT_EQ(cert.verdict, Verdict::frobenius);
  EXPECT_EQ(cert.rank, 4u);
  EXPECT_EQ(cert.phi_degree, filtered_cert.phi_degree);
}

TEST(ReesAlgebra, RankTwoGroupUsesABox) {
  const auto F = RootField::create(101, 2);
  const QuantumAffineSpace Q(F, {{0, 1}, {-1, 0}}, {GroupElement({1, 0}), GroupElement({0, 1})});
  const ReesAlgebra RA(Q.algebra(), GroupElement({2, 2}));
  EXPECT_EQ(RA.window_degrees().size(), 9u);
  for (const auto& u : RA.enumerate_window(4)) {
    const auto [b, g] = RA.split(u);
    EXPECT_TRUE(Q.algebra().degree(b) <= g);
    EXPECT_LE(g[0], 2);
    EXPECT_LE(g[1], 2);
  }
  const auto E = rees_extension(RA, Q.extension(), Q.form_degree());
  const auto cert = verify_frobenius(E);
  EXPECT_EQ(cert.verdict, Verdict::frobenius);
  EXPECT_EQ(cert.rank, 4u);
  EXPECT_THROW(ReesAlgebra(Q.algebra(), GroupElement({2})), DimensionError);
  EXPECT_THROW(ReesAlgebra(Q.algebra(), GroupElement({1, -1})), DomainError);
}
