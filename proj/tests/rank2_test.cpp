#include "k3/rank2.hpp"

#include <gtest/gtest.h>

using namespace k3;

namespace {

Rank2Params P(long b, long c) { return Rank2Params::canonical(b, c); }

std::vector<std::vector<Integer>> classes(std::initializer_list<std::initializer_list<long>> cs) {
  std::vector<std::vector<Integer>> out;
  for (const auto& c : cs) out.emplace_back(c.begin(), c.end());
  return out;
}

}  // namespace

TEST(Rank2Params, Canonical) {
  EXPECT_EQ(P(-5, 7), (Rank2Params{5, 2}));
  EXPECT_EQ(P(5, -1), (Rank2Params{5, 4}));
  EXPECT_THROW(P(0, 1), InvalidInput);
}

TEST(Gl2Oracle, Examples) {
  const IntMatrix d = int_matrix({{2, 0}, {0, -2}});
  EXPECT_EQ(gl2_isometry_oracle(d, d), identity_matrix(2));

  const IntMatrix g52 = lambda_gram(P(5, 2)), g53 = lambda_gram(P(5, 3));
  const auto a = gl2_isometry_oracle(g52, g53);
  ASSERT_TRUE(a.has_value());
  EXPECT_TRUE(is_gl2_witness(g52, g53, *a));
  EXPECT_TRUE(is_gl2_witness(g52, g53, int_matrix({{-2, -1}, {5, 3}})));

  EXPECT_FALSE(gl2_isometry_oracle(lambda_gram(P(5, 1)), lambda_gram(P(5, 4)), 10'000).has_value());
}

TEST(Gl2Oracle, DegenerateForms) {
  const IntMatrix z = IntMatrix::Zero(2, 2);
  EXPECT_TRUE(gl2_isometry_oracle(z, z).has_value());
  const IntMatrix r1 = int_matrix({{2, 0}, {0, 0}});
  const IntMatrix r1b = int_matrix({{0, 0}, {0, 2}});
  const auto a = gl2_isometry_oracle(r1, r1b, 50);
  ASSERT_TRUE(a.has_value());
  EXPECT_TRUE(is_gl2_witness(r1, r1b, *a));
  EXPECT_FALSE(gl2_isometry_oracle(r1, int_matrix({{0, 0}, {0, 4}}), 50).has_value());
}

TEST(Gl2Oracle, SelfIsometriesOfLambda) {
  EXPECT_EQ(gl2_isometries(lambda_gram(P(5, 4)), lambda_gram(P(5, 4))).size(), 4u);
  EXPECT_EQ(gl2_isometries(lambda_gram(P(5, 2)), lambda_gram(P(5, 2))).size(), 2u);
  EXPECT_EQ(gl2_isometries(lambda_gram(P(3, 0)), lambda_gram(P(3, 0))).size(), 4u);
}

TEST(LambdaIsometric, Examples) {
  const auto r = lambda_isometric(P(5, 2), P(5, 3));
  EXPECT_EQ(r.verdict, Verdict::ISOMETRIC);
  EXPECT_EQ(*r.witness, int_matrix({{-2, -1}, {5, 3}}));
  EXPECT_EQ(lambda_isometric(P(5, 1), P(5, 4)).verdict, Verdict::NOT_ISOMETRIC);
  const auto same = lambda_isometric(P(7, 0), P(7, 0));
  EXPECT_EQ(same.verdict, Verdict::ISOMETRIC);
  EXPECT_EQ(*same.witness, identity_matrix(2));
  EXPECT_EQ(lambda_isometric(P(4, 1), P(5, 1)).verdict, Verdict::NOT_ISOMETRIC);
}

TEST(LambdaIsometric, NonCoprimeUsesOracleAndForms) {
  // (9,3) and (9,6) have different q-value multisets.
  const auto r = lambda_isometric(P(9, 3), P(9, 6));
  EXPECT_EQ(r.verdict, Verdict::NOT_ISOMETRIC);
  EXPECT_EQ(r.method, "discriminant_form");
  // A tiny budget on both searches leaves the question open.
  const auto tiny = lambda_isometric(P(9, 3), P(9, 6), {1, 10});
  EXPECT_EQ(tiny.verdict, Verdict::INCONCLUSIVE);
  // Lambda_{6,2} = Lambda_{3,1}(2) and Lambda_{6,4} = Lambda_{3,2}(2) differ.
  const auto s = lambda_isometric(P(6, 2), P(6, 2 + 6));
  EXPECT_EQ(s.verdict, Verdict::ISOMETRIC);
}

TEST(LambdaIsometric, ReductionInvariance) {
  for (long b = 1; b <= 9; ++b)
    for (long c = 0; c < b; ++c)
      for (long k : {-3, -1, 1, 2, 5}) {
        EXPECT_EQ(lambda_isometric(P(b, c), P(b, c + k * b)).verdict, Verdict::ISOMETRIC);
        EXPECT_EQ(lambda_isometric(P(b, c), P(-b, c)).verdict, Verdict::ISOMETRIC);
      }
}

TEST(GammaIsometric, Examples) {
  EXPECT_FALSE(gamma_isometric(P(2, 0), P(2, 1)));
  EXPECT_TRUE(gamma_isometric(P(5, 1), P(5, 4)));
  EXPECT_TRUE(gamma_isometric(P(7, 3), P(7, 3)));
  EXPECT_FALSE(gamma_isometric(P(5, 1), P(5, 2)));
}

TEST(GammaClassCensus, SmallPrimes) {
  EXPECT_EQ(gamma_class_census(5), classes({{0}, {1, 4}, {2, 3}}));
  EXPECT_EQ(gamma_class_census(7), classes({{0}, {1, 2, 4}, {3, 5, 6}}));
  EXPECT_EQ(gamma_class_census(3), classes({{0}, {1}, {2}}));
  EXPECT_THROW(gamma_class_census(9), InvalidInput);
}

TEST(KahlerCone, Examples) {
  const auto c31 = kahler_cone(P(3, 1));
  EXPECT_TRUE(c31.neg2_curves.empty());
  EXPECT_EQ(c31.covectors, (std::vector<IntVector>{int_vector({0, 1}), int_vector({3, 1})}));

  const auto c32 = kahler_cone(P(3, 2));
  EXPECT_EQ(c32.neg2_curves, (std::vector<IntVector>{int_vector({-1, 1})}));
  EXPECT_EQ(c32.covectors[1], int_vector({3, 1}));

  const auto c10 = kahler_cone(P(1, 0));
  EXPECT_EQ(c10.neg2_curves, (std::vector<IntVector>{int_vector({-1, 1})}));
}

TEST(KahlerCone, CurvesAndFibrationsAreConsistent) {
  for (long b = 1; b <= 12; ++b)
    for (long c = 0; c < b; ++c) {
      const auto p = P(b, c);
      const IntMatrix g = lambda_gram(p);
      const auto cone = kahler_cone(p);
      for (const auto& n : cone.neg2_curves) EXPECT_EQ((n.transpose() * g * n)(0, 0), -2);
      for (const auto& e : cone.fibrations) {
        EXPECT_EQ((e.transpose() * g * e)(0, 0), 0);
        EXPECT_EQ(gcd(e(0), e(1)), 1);
        for (const auto& w : cone.covectors) EXPECT_GE(w.dot(e), 0) << b << "," << c;
      }
    }
}

TEST(FibrationClasses, Examples) {
  EXPECT_EQ(fibration_classes(P(3, 1)), (std::vector<IntVector>{int_vector({1, 0}), int_vector({-1, 3})}));
  EXPECT_EQ(fibration_classes(P(2, 0)), (std::vector<IntVector>{int_vector({1, 0}), int_vector({0, 1})}));
  EXPECT_EQ(fibration_classes(P(3, 2)), (std::vector<IntVector>{int_vector({1, 0})}));
  EXPECT_EQ(fibration_classes(P(6, 4)), (std::vector<IntVector>{int_vector({1, 0}), int_vector({-2, 3})}));
}

TEST(Automorphisms, Examples) {
  const auto a20 = automorphisms(P(2, 0));
  EXPECT_EQ(a20.orthogonal_group, OrthogonalGroup::PM_I_AND_J);
  EXPECT_EQ(a20.k3_automorphisms, K3Automorphisms::Z2);
  const auto a54 = automorphisms(P(5, 4));
  EXPECT_EQ(a54.orthogonal_group, OrthogonalGroup::PM_I_AND_J);
  EXPECT_EQ(a54.k3_automorphisms, K3Automorphisms::TRIVIAL);
  const auto a52 = automorphisms(P(5, 2));
  EXPECT_EQ(a52.orthogonal_group, OrthogonalGroup::PM_I);
  EXPECT_EQ(a52.k3_automorphisms, K3Automorphisms::TRIVIAL);
}

TEST(Automorphisms, FormulaMatchesOracleEnumeration) {
  for (long b = 1; b <= 15; ++b)
    for (long c = 0; c < b; ++c) {
      const auto p = P(b, c);
      const IntMatrix g = lambda_gram(p);
      const auto all = gl2_isometries(g, g, 200);
      const auto aut = automorphisms(p);
      EXPECT_EQ(all.size(), aut.orthogonal_group == OrthogonalGroup::PM_I ? 2u : 4u) << b << "," << c;
      if (aut.j) EXPECT_TRUE(is_gl2_witness(g, g, *aut.j));
    }
}

TEST(FmPartnerCount, Examples) {
  const auto f5 = fm_partner_count(5);
  EXPECT_EQ(f5.class_count(), 2);
  EXPECT_EQ(f5.fibration_total(), 2);
  const auto f13 = fm_partner_count(13);
  EXPECT_EQ(f13.class_count(), 4);
  EXPECT_EQ(f13.fibration_total(), 6);
  const auto f17 = fm_partner_count(17);
  EXPECT_EQ(f17.class_count(), 5);
  EXPECT_EQ(f17.fibration_total(), 8);
  std::vector<int> tally;
  for (const auto& c : f17.classes) {
    tally.push_back(c.fibrations);
    EXPECT_EQ(static_cast<std::size_t>(c.fibrations), c.members.size());
  }
  std::sort(tally.begin(), tally.end());
  EXPECT_EQ(tally, (std::vector<int>{1, 1, 2, 2, 2}));
  EXPECT_THROW(fm_partner_count(7), InvalidInput);
}

TEST(JacobianUnique, Examples) {
  EXPECT_TRUE(jacobian_unique(P(5, 1)));
  EXPECT_FALSE(jacobian_unique(P(2, 0)));
  EXPECT_TRUE(jacobian_unique(P(7, 2)));
  EXPECT_THROW(jacobian_unique(P(5, 4)), InvalidInput);
  EXPECT_THROW(jacobian_unique(P(6, 1)), InvalidInput);
}
