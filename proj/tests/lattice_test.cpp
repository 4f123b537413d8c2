#include "k3/lattice.hpp"

#include <gtest/gtest.h>

#include <numeric>

using namespace k3;

namespace {

Rational q(long p, long r) { return make_rational(Integer(p), Integer(r)); }

std::size_t nontrivial(const std::vector<IsotropicSubgroup>& subs) {
  std::size_t n = 0;
  for (const auto& s : subs) n += s.order > 1;
  return n;
}

}  // namespace

TEST(StandardLattice, Constructors) {
  EXPECT_EQ(standard_lattice(LatticeName::U).gram(), int_matrix({{0, 1}, {1, 0}}));
  EXPECT_EQ(standard_lattice(LatticeName::LAMBDA_BC, 2, 0).gram(), int_matrix({{0, 2}, {2, 0}}));
  EXPECT_THROW(standard_lattice(LatticeName::LAMBDA_BC, 0, 1), InvalidInput);

  const auto g = standard_lattice(LatticeName::GAMMA_BC, 5, 2);
  EXPECT_EQ(g.rank(), 20);
  EXPECT_EQ(g.gram().topLeftCorner(2, 2), int_matrix({{0, 5}, {5, 4}}));
  EXPECT_EQ(g.determinant(), 25);

  const auto e8 = e8_negative();
  EXPECT_EQ(e8.determinant(), 1);
  EXPECT_TRUE(e8.is_even());
  EXPECT_EQ(e8.signature(), (Signature{0, 8, 0}));
  EXPECT_EQ(k3_lattice().signature(), (Signature{3, 19, 0}));
  EXPECT_EQ(k3_lattice().determinant(), -1);
  EXPECT_EQ(transcendental_rank_one_k3(1).determinant(), -2);
}

TEST(StandardLattice, ParseNames) {
  EXPECT_EQ(parse_lattice_name("E8(-1)"), LatticeName::E8_MINUS_1);
  EXPECT_EQ(parse_lattice_name("lambda_k3"), LatticeName::LAMBDA_K3);
  EXPECT_EQ(parse_lattice_name("GAMMA"), LatticeName::GAMMA);
  EXPECT_FALSE(parse_lattice_name("D4").has_value());
}

TEST(DiscriminantForm, Unimodular) {
  EXPECT_EQ(discriminant_form(hyperbolic_plane()).order(), 1);
  EXPECT_EQ(discriminant_form(gamma_lattice()).generator_count(), 0u);
}

TEST(DiscriminantForm, LambdaCoprime) {
  // gcd(b, 2c) = 1: cyclic of order b^2 with a generator of square -2c/b^2.
  for (long b : {3, 5, 7, 9}) {
    for (long c = 1; c < b; ++c) {
      if (std::gcd(b, 2 * c) != 1) continue;
      const auto d = discriminant_form(lambda_bc(b, c));
      ASSERT_EQ(d.invariant_factors(), (std::vector<Integer>{b * b}));
      const auto expected = DiscriminantForm::cyclic(b * b, QMod2Z(q(-2 * c, b * b)));
      EXPECT_TRUE(disc_forms_isomorphic(d, expected).has_value()) << b << "," << c;
    }
  }
}

TEST(DiscriminantForm, LambdaTwoZero) {
  const auto d = discriminant_form(lambda_bc(2, 0));
  EXPECT_EQ(d.orders(), (std::vector<Integer>{2, 2}));
  EXPECT_EQ(d.q_values()[0], QMod2Z(0));
  EXPECT_EQ(d.q_values()[1], QMod2Z(0));
  EXPECT_EQ(d.bilinear()(0, 1), q(1, 2));
}

TEST(DiscriminantForm, OrderMatchesDeterminant) {
  for (long b = 1; b <= 8; ++b)
    for (long c = 0; c < b; ++c) {
      const auto l = gamma_bc(b, c);
      EXPECT_EQ(discriminant_form(l).order(), abs(l.determinant()));
    }
  EXPECT_THROW(discriminant_form(GramLattice(int_matrix({{1, 0}, {0, 1}}))), InvalidInput);
  EXPECT_THROW(discriminant_form(GramLattice(int_matrix({{0, 0}, {0, 2}}))), InvalidInput);
}

TEST(DiscriminantForm, LiftsRecomputeQ) {
  const auto l = direct_sum({lambda_bc(6, 2), rank_one(-4)});
  const auto d = discriminant_form(l);
  const RatMatrix g = to_rational(l.gram());
  for (std::size_t i = 0; i < d.generator_count(); ++i) {
    RatVector v = d.generator_lifts()[i];
    EXPECT_TRUE(qmod2z_eq(d.q_values()[i], QMod2Z(l.inner(v, v))));
    for (Index k = 0; k < v.size(); ++k) {
      RatVector w = v;
      w(k) += 3;  // another lift of the same class
      EXPECT_TRUE(qmod2z_eq(QMod2Z(l.inner(v, v)), QMod2Z(l.inner(w, w))));
    }
  }
}

TEST(DiscriminantForm, DirectSumIsOrthogonalSum) {
  const auto a = lambda_bc(5, 1);
  const auto b = lambda_bc(6, 1);
  const auto lhs = discriminant_form(direct_sum({a, b}));
  const auto rhs = orthogonal_sum(discriminant_form(a), discriminant_form(b));
  EXPECT_TRUE(disc_forms_isomorphic(lhs, rhs).has_value());
}

TEST(DiscFormsIsomorphic, CyclicMultiplier) {
  const auto a = DiscriminantForm::cyclic(25, QMod2Z(q(-2, 25)));
  const auto b = DiscriminantForm::cyclic(25, QMod2Z(q(-8, 25)));
  const auto c = DiscriminantForm::cyclic(25, QMod2Z(q(-4, 25)));
  const auto iso = disc_forms_isomorphic(a, b);
  ASSERT_TRUE(iso.has_value());
  ASSERT_TRUE(iso->multiplier.has_value());
  EXPECT_EQ(*iso->multiplier, 2);
  EXPECT_TRUE(verify_form_isometry(a, b, *iso));
  EXPECT_FALSE(disc_forms_isomorphic(a, c).has_value());
  const auto self = disc_forms_isomorphic(a, a);
  ASSERT_TRUE(self.has_value());
  EXPECT_EQ(*self->multiplier, 1);
}

TEST(DiscFormsIsomorphic, GeneralSearchAndBound) {
  const auto a = discriminant_form(lambda_bc(2, 0));
  const auto u2 = discriminant_form(scaled(hyperbolic_plane(), 2));
  const auto iso = disc_forms_isomorphic(a, u2);
  ASSERT_TRUE(iso.has_value());
  EXPECT_TRUE(verify_form_isometry(a, u2, *iso));
  const auto d1 = discriminant_form(rank_one(-2));
  const auto odd = orthogonal_sum(d1, d1);
  EXPECT_FALSE(disc_forms_isomorphic(a, odd).has_value());
  EXPECT_THROW(disc_forms_isomorphic(a, a, 3), Inconclusive);
}

TEST(IsotropicSubgroups, HalfXSquaredPlusYZ) {
  RatMatrix b = RatMatrix::Zero(3, 3);
  b(1, 2) = b(2, 1) = q(1, 2);
  b(0, 0) = q(1, 2);
  const DiscriminantForm f({2, 2, 2}, {QMod2Z(q(1, 2)), QMod2Z(0), QMod2Z(0)}, b);
  const auto subs = isotropic_subgroups(f);
  EXPECT_EQ(nontrivial(subs), 2u);
  EXPECT_EQ(subs[1].generators, (std::vector<std::vector<Integer>>{{0, 0, 1}}));
  EXPECT_EQ(subs[2].generators, (std::vector<std::vector<Integer>>{{0, 1, 0}}));
  EXPECT_TRUE(subs[1].maximal && subs[2].maximal);
}

TEST(IsotropicSubgroups, GammaCoprimeHasUniqueOrderB) {
  for (long b : {3, 5, 7}) {
    for (long c = 1; c < b; ++c) {
      if (std::gcd(b, 2 * c) != 1) continue;
      const auto subs = isotropic_subgroups(discriminant_form(gamma_bc(b, c)));
      int of_order_b = 0;
      for (const auto& s : subs) of_order_b += s.order == b;
      EXPECT_EQ(of_order_b, 1) << b << "," << c;
    }
  }
}

TEST(IsotropicSubgroups, LambdaTwoZeroHasTwoMaximal) {
  const auto subs = isotropic_subgroups(discriminant_form(lambda_bc(2, 0)));
  int maximal = 0;
  for (const auto& s : subs) maximal += s.maximal;
  EXPECT_EQ(maximal, 2);
  EXPECT_THROW(isotropic_subgroups(discriminant_form(lambda_bc(2, 0)), 2), Inconclusive);
}

TEST(KernelSublattice, HyperbolicPlane) {
  const auto u = hyperbolic_plane();
  const auto k = kernel_sublattice(u, pairing_character(u, int_vector({1, -1}), 2));
  EXPECT_EQ(k.index, 2);
  EXPECT_EQ(k.lattice.determinant(), -4);
  EXPECT_EQ(k.lattice.signature(), (Signature{1, 1, 0}));
  EXPECT_TRUE(disc_forms_isomorphic(discriminant_form(k.lattice),
                                    discriminant_form(GramLattice(int_matrix({{2, 0}, {0, -2}}))))
                  .has_value());
  EXPECT_THROW(kernel_sublattice(u, Character{{2, 4}, 2}), InvalidInput);
}

TEST(KernelSublattice, IndexDeterminantLaw) {
  const auto g = gamma_lattice();
  IntVector gamma = IntVector::Zero(20);
  gamma(0) = 1;
  gamma(5) = 2;
  const auto k = kernel_sublattice(g, pairing_character(g, gamma, 3));
  EXPECT_EQ(k.index, 3);
  EXPECT_EQ(abs(k.lattice.determinant()), 9);
}

TEST(OrthogonalComplement, Basics) {
  const auto u = hyperbolic_plane();
  EXPECT_EQ(orthogonal_complement(u, int_matrix({{1}, {1}})).lattice.gram(), int_matrix({{-2}}));
  EXPECT_THROW(orthogonal_complement(u, int_matrix({{1, 2}, {1, 2}})), InvalidInput);
}

TEST(OrthogonalComplement, EmbeddingRecipe) {
  const auto u2 = direct_sum({hyperbolic_plane(), hyperbolic_plane()});
  const IntMatrix s = int_matrix({{1, 0}, {0, 0}, {2, 2}, {0, 1}});
  const auto comp = orthogonal_complement(u2, s);
  EXPECT_EQ(comp.lattice.rank(), 2);
  // Up to a change of basis the complement is (0, -2, -4).
  const auto target = GramLattice(int_matrix({{0, -2}, {-2, -4}}));
  EXPECT_EQ(comp.lattice.determinant(), target.determinant());
  EXPECT_TRUE(disc_forms_isomorphic(discriminant_form(comp.lattice), discriminant_form(target)).has_value());
  const auto image = GramLattice(s.transpose() * u2.gram() * s);
  EXPECT_EQ(image.gram(), int_matrix({{0, 2}, {2, 4}}));
}
