#include "k3/hermite.hpp"

#include <gtest/gtest.h>

#include <random>

namespace k3 {
namespace {

QuarticModel model(long a0, long a1, long a2, long a3, long a4) {
  return QuarticModel::constant({Rational(a0), Rational(a1), Rational(a2), Rational(a3), Rational(a4)});
}

Poly p(std::string_view s, const char* var = "t") { return parse_poly(s, var); }

TEST(Jacobian, SimpleSubstitutions) {
  auto w = hermite_jacobian(model(1, 0, 0, 0, 1));
  EXPECT_EQ(w.g2, Poly(Rational(1)));
  EXPECT_TRUE(w.g3.is_zero());
  EXPECT_EQ(weierstrass_disc(w), Poly(Rational(1)));

  w = hermite_jacobian(model(0, 1, 0, 0, 0));
  EXPECT_TRUE(w.g2.is_zero());
  EXPECT_TRUE(w.g3.is_zero());
  EXPECT_TRUE(weierstrass_disc(w).is_zero());

  w = hermite_jacobian(model(0, 0, 1, 0, 0));
  EXPECT_EQ(w.g2, Poly(Rational(3)));
  EXPECT_EQ(w.g3, Poly(Rational(-1)));
  EXPECT_TRUE(weierstrass_disc(w).is_zero());
}

TEST(Jacobian, DoubleQuadricDegrees) {
  const QuarticModel q({p("1,0,0,0,1"), p("0,-1,0,0,2"), p("3,0,0,0,1"), p("0,0,1,0,-1"), p("7,0,0,0,5")},
                       kDoubleQuadricDegrees);
  const auto w = hermite_jacobian(q);
  EXPECT_EQ(w.g2.degree(), Degree(8));
  EXPECT_EQ(w.g3.degree(), Degree(12));
}

TEST(Jacobian, NodalSexticDegrees) {
  const QuarticModel q({p("1,0,1"), p("-2,0,0,1"), p("0,1,0,0,3"), p("1,0,0,0,0,1"), p("0,-1,0,0,0,0,2")},
                       kNodalSexticDegrees);
  const auto w = hermite_jacobian(q);
  EXPECT_EQ(w.g2.degree(), Degree(8));
  EXPECT_EQ(w.g3.degree(), Degree(12));
}

TEST(QuarticModel, RejectsBadInput) {
  EXPECT_THROW(model(0, 0, 0, 0, 0), InvalidInput);
  EXPECT_THROW(QuarticModel({p("0,0,0,0,0,1"), p("1"), p("1"), p("1"), p("1")}, kDoubleQuadricDegrees), InvalidInput);
}

TEST(QuarticModel, PlainCoefficientsAreDivided) {
  const auto q = QuarticModel::from_plain({p("1"), p("4"), p("12"), p("8"), p("5")});
  EXPECT_EQ(q.a[1], Poly(Rational(1)));
  EXPECT_EQ(q.a[2], Poly(Rational(2)));
  EXPECT_EQ(q.a[3], Poly(Rational(2)));
  EXPECT_EQ(to_string(q.quartic()), "v^4 + 4*v^3 + 12*v^2 + 8*v + 5");
}

TEST(ConicMatrix, FermatQuartic) {
  const auto c = conic_matrix(model(1, 0, 0, 0, 1));
  EXPECT_TRUE(c.identity_verified);
  EXPECT_TRUE(c.identity_plus_g3);
  const PolyX x = PolyX::variable("x");
  EXPECT_EQ(c.m(0, 2), PolyX(2) * x);
  EXPECT_EQ(c.m(1, 1), -x);
  EXPECT_EQ(c.det, PolyX(4) * x * x * x - x);
}

// det(M) at x = 0 is the catalecticant, which equals g3, so the expansion
// is 4x^3 - g2 x + g3 and agrees with 4x^3 - g2 x - g3 only when g3 = 0.
TEST(ConicMatrix, NodalCase) {
  const auto c = conic_matrix(model(0, 0, 1, 0, 0));
  const PolyX x = PolyX::variable("x");
  EXPECT_EQ(c.det, PolyX(4) * x * x * x - PolyX(3) * x - PolyX(1));
  EXPECT_FALSE(c.identity_verified);
  EXPECT_TRUE(c.identity_plus_g3);
}

TEST(ConicMatrix, SymbolicExpansion) {
  EXPECT_FALSE(conic_identity_holds_symbolically());
  EXPECT_TRUE(conic_identity_plus_g3_holds_symbolically());
}

TEST(ConicMatrix, PolynomialCoefficients) {
  const QuarticModel q({p("1,0,0,0,1"), p("0,-1,0,0,2"), p("3,0,0,0,1"), p("0,0,1,0,-1"), p("7,0,0,0,5")});
  const auto c = conic_matrix(q);
  EXPECT_TRUE(c.identity_plus_g3);
  EXPECT_FALSE(c.identity_verified);
}

TEST(Translation, InvariantsSymbolic) { EXPECT_TRUE(hermite_invariants_translation_invariant()); }

TEST(Translation, ConcreteShift) {
  const std::array<Rational, 5> a{Rational(2), Rational(-1), make_rational(1, 3), Rational(5), Rational(-7)};
  const auto moved = translate(a, Rational(3));
  EXPECT_EQ(hermite_g2(moved), hermite_g2(a));
  EXPECT_EQ(hermite_g3(moved), hermite_g3(a));
  // The translated model is the quartic evaluated at v + 3.
  EXPECT_EQ(QuarticModel::constant(moved).quartic(), shift(QuarticModel::constant(a).quartic(), Rational(3)));
}

TEST(FibrationNumerics, Formulas) {
  auto f = fibration_numerics(2);
  EXPECT_EQ(f.genus, 10);
  EXPECT_EQ(f.euler, 24);
  EXPECT_EQ(f.theta_dim, 4);
  EXPECT_EQ(2 * f.genus, 22 - 2);
  f = fibration_numerics(1);
  EXPECT_EQ(f.genus, 4);
  EXPECT_EQ(f.euler, 12);
  f = fibration_numerics(3);
  EXPECT_EQ(f.genus, 16);
  EXPECT_EQ(f.euler, 36);
  EXPECT_EQ(f.theta_parity, "even");
  for (int d = 1; d < 20; ++d) {
    const auto g = fibration_numerics(d);
    EXPECT_EQ(g.canonical_degree, g.twice_theta_degree);
  }
  EXPECT_THROW(fibration_numerics(0), InvalidInput);
}

TEST(ComplexRoots, Cyclotomic) {
  const auto r = complex_roots(p("1,0,0,0,1", "x"));
  ASSERT_EQ(r.size(), 4u);
  for (const auto& z : r) EXPECT_LT(static_cast<double>(abs(z * z * z * z + ComplexHP(1))), 1e-25);
}

TEST(Trigonal, FermatQuartic) {
  const auto r = trigonal_resolvent(model(1, 0, 0, 0, 1));
  EXPECT_EQ(r.cubic.g2, Poly(Rational(1)));
  EXPECT_TRUE(r.cubic.g3.is_zero());
  ASSERT_EQ(r.cubic_roots.size(), 3u);
  EXPECT_NEAR(r.cubic_roots[0].real(), -0.5, 1e-12);
  EXPECT_NEAR(std::abs(r.cubic_roots[1]), 0.0, 1e-12);
  EXPECT_NEAR(r.cubic_roots[2].real(), 0.5, 1e-12);
  EXPECT_TRUE(r.passed);
  EXPECT_LT(r.residual, 1e-20);
}

TEST(Trigonal, RejectsDegenerate) {
  EXPECT_THROW(trigonal_resolvent(model(0, 0, 1, 0, 1)), InvalidInput);
  EXPECT_THROW(trigonal_resolvent(model(1, 0, 0, 0, 0)), InvalidInput);
}

TEST(Trigonal, RandomQuartics) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> coeff(-9, 9);
  int done = 0;
  while (done < 20) {
    const auto q = model(coeff(rng), coeff(rng), coeff(rng), coeff(rng), coeff(rng));
    if (q.a[0].is_zero() || weierstrass_disc(hermite_jacobian(q)).is_zero()) continue;
    const auto r = trigonal_resolvent(q);
    EXPECT_TRUE(r.passed) << r.residual;
    ++done;
  }
}

TEST(RepeatedRoots, DiscriminantDetects) {
  // (v - 1)^2 (v^2 + 1) and (v - 1)(v + 2)(v^2 + 3)
  const auto repeated = QuarticModel::from_plain({p("1"), p("-2"), p("2"), p("-2"), p("1")});
  EXPECT_TRUE(weierstrass_disc(hermite_jacobian(repeated)).is_zero());
  const auto distinct = QuarticModel::from_plain({p("1"), p("1"), p("1"), p("3"), p("-6")});
  EXPECT_FALSE(weierstrass_disc(hermite_jacobian(distinct)).is_zero());
}

TEST(Diagonalize, Identity) {
  Matrix<RatFunc> m(3, 3);
  for (Index i = 0; i < 3; ++i)
    for (Index j = 0; j < 3; ++j) m(i, j) = RatFunc(i == j ? 1 : 0);
  const auto dz = diagonalize_symmetric<RatFunc>(m);
  for (Index i = 0; i < 3; ++i) {
    EXPECT_EQ(dz.diagonal[static_cast<std::size_t>(i)], RatFunc(1));
    for (Index j = 0; j < 3; ++j) EXPECT_EQ(dz.P(i, j), RatFunc(i == j ? 1 : 0));
  }
  const auto s = quaternion_symbol({RatFunc(1), RatFunc(1), RatFunc(1)});
  EXPECT_EQ(s.first, RatFunc(-1));
  EXPECT_EQ(s.second, RatFunc(-1));
}

TEST(Diagonalize, FermatQuartic) {
  const auto dz = diagonalize_conic(model(1, 0, 0, 0, 1));
  EXPECT_TRUE(dz.identity_verified);
  EXPECT_EQ(to_string(dz.d[0]), "1");
  EXPECT_EQ(to_string(dz.d[1]), "-x");
  EXPECT_EQ(to_string(dz.d[2]), "-4*x^2 + 1");
  const auto s = quaternion_symbol(dz.d);
  EXPECT_EQ(to_string(s.first), "x");
  EXPECT_EQ(to_string(s.second), "4*x^2 - 1");
}

TEST(Diagonalize, ZeroLeadingEntryPivots) {
  const auto dz = diagonalize_conic(model(0, 1, 0, 2, 1));
  EXPECT_TRUE(dz.identity_verified);
  for (const auto& f : dz.d) EXPECT_FALSE(f.is_zero());
  const auto dz2 = diagonalize_conic(model(0, 0, 1, 1, 1));
  EXPECT_TRUE(dz2.identity_verified);
}

TEST(Diagonalize, RejectsSingular) {
  Matrix<RatFunc> m(3, 3);
  for (Index i = 0; i < 3; ++i)
    for (Index j = 0; j < 3; ++j) m(i, j) = RatFunc(0);
  m(0, 0) = RatFunc(1);
  EXPECT_THROW(diagonalize_symmetric<RatFunc>(m), InvalidInput);
  EXPECT_THROW(quaternion_symbol({RatFunc(1), RatFunc(0), RatFunc(1)}), InvalidInput);
}

}  // namespace
}  // namespace k3
