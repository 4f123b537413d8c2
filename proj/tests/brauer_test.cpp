#include "k3/brauer.hpp"
#include "k3/normal_form.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace k3;

namespace {

std::uint32_t bits(std::initializer_list<int> coords) {
  std::uint32_t v = 0;
  for (int i : coords) v |= 1u << i;
  return v;
}

}  // namespace

TEST(F2Form, Values) {
  const auto u = F2Form::from_gram(hyperbolic_plane());
  EXPECT_EQ(u(bits({0})), 0);
  EXPECT_EQ(u(bits({0, 1})), 1);
  const auto e8 = F2Form::from_gram(e8_negative());
  for (int i = 0; i < 8; ++i) EXPECT_EQ(e8(bits({i})), 1);
  EXPECT_THROW(F2Form::from_gram(rank_one(1)), InvalidInput);
}

TEST(F2Form, PolarFormIsGramModTwo) {
  const auto l = lambda_prime();
  const auto f = F2Form::from_gram(l);
  for (int i = 0; i < 20; ++i)
    for (int j = 0; j < 20; ++j)
      EXPECT_EQ(f.polar(bits({i}), bits({j})), i == j ? 0 : static_cast<int>(mod(l.gram()(i, j), Integer(2))));
}

TEST(CountF2Zeros, SmallForms) {
  EXPECT_EQ(count_f2_zeros(F2Form::from_gram(hyperbolic_plane())), 3u);
  EXPECT_EQ(count_f2_zeros(F2Form::from_gram(direct_sum({hyperbolic_plane(), hyperbolic_plane()}))), 10u);
  EXPECT_EQ(count_f2_zeros(F2Form::from_gram(e8_negative())), 136u);  // 2^3 (2^4 + 1)
  EXPECT_THROW(count_f2_zeros(F2Form::from_gram(k3_lattice().gram().rows() > 24 ? k3_lattice() : direct_sum({k3_lattice(), hyperbolic_plane(), hyperbolic_plane()}))), InvalidInput);
}

TEST(CountF2Zeros, InvariantUnderBasisChange) {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> entry(-2, 2);
  const auto l = direct_sum({hyperbolic_plane(), e8_negative()});
  const auto base = count_f2_zeros(F2Form::from_gram(l));
  for (int t = 0; t < 5; ++t) {
    // Unimodular change of basis: a product of elementary matrices.
    IntMatrix p = identity_matrix(10);
    for (int k = 0; k < 30; ++k) {
      const Index i = static_cast<Index>(rng() % 10), j = static_cast<Index>(rng() % 10);
      if (i == j) continue;
      IntMatrix e = identity_matrix(10);
      e(i, j) = entry(rng);
      p = p * e;
    }
    const GramLattice changed(p.transpose() * l.gram() * p);
    EXPECT_EQ(count_f2_zeros(F2Form::from_gram(changed)), base);
  }
}

TEST(LambdaBits, RoundTrip) {
  const std::string s = "10100000000000000001";
  EXPECT_EQ(lambda_to_string(parse_lambda(s)), s);
  EXPECT_EQ(parse_lambda(s), bits({0, 2, 19}));
  EXPECT_THROW(parse_lambda("101"), InvalidInput);
  EXPECT_THROW(parse_lambda("1010000000000000000x"), InvalidInput);
}

TEST(Brauer2Class, Examples) {
  const auto a0 = brauer2_class({1, 0, bits({0})});
  EXPECT_EQ(a0.group, (std::vector<Integer>{2, 2, 2}));
  EXPECT_FALSE(a0.even.has_value());

  const auto even = brauer2_class({1, 1, bits({0})});  // e1 of U is isotropic
  EXPECT_EQ(even.group, (std::vector<Integer>{8}));
  EXPECT_EQ(even.even, true);
  const auto odd = brauer2_class({1, 1, bits({0, 1})});
  EXPECT_EQ(odd.even, false);

  const auto d2 = brauer2_class({2, 1, bits({0, 1})});
  EXPECT_EQ(d2.group, (std::vector<Integer>{16}));
  EXPECT_FALSE(d2.even.has_value());

  EXPECT_THROW(brauer2_class({1, 0, 0}), InvalidInput);
  EXPECT_EQ(brauer2_class({3, 0, bits({4})}).group, (std::vector<Integer>{2, 2, 6}));
}

TEST(Brauer2Class, MatchesKernelComputation) {
  std::mt19937_64 rng(2024);
  for (long d : {1, 2, 3}) {
    for (int t = 0; t < 12; ++t) {
      BrauerElement e{d, static_cast<int>(rng() & 1u), static_cast<std::uint32_t>(rng() & 0xFFFFFu)};
      if (e.is_zero()) continue;
      const auto predicted = brauer2_class(e);
      const auto actual = brauer_kernel_form(e);
      EXPECT_EQ(actual.invariant_factors(), predicted.group);
      EXPECT_TRUE(disc_forms_isomorphic(actual, predicted.predicted).has_value())
          << d << " " << e.a << " " << lambda_to_string(e.lambda);
    }
  }
}

TEST(Brauer2Class, EvenAndOddClassesDiffer) {
  const auto even = brauer2_class({1, 1, bits({0})}).predicted;
  const auto odd = brauer2_class({1, 1, bits({0, 1})}).predicted;
  EXPECT_FALSE(disc_forms_isomorphic(even, odd).has_value());
}

TEST(Brauer2Census, Counts) {
  const auto c1 = brauer2_census(1);
  EXPECT_EQ(c1.a0, 1048575u);
  EXPECT_EQ(c1.a1_even, 524800u);
  EXPECT_EQ(c1.a1_odd, 523776u);
  EXPECT_EQ(c1.total(), (1u << 21) - 1);
  const auto c2 = brauer2_census(2);
  EXPECT_EQ(c2.a0, 1048575u);
  EXPECT_EQ(c2.a1_even, 1048576u);
  EXPECT_FALSE(c2.a1_odd.has_value());
  EXPECT_EQ(c2.total(), (1u << 21) - 1);
}

TEST(SquareSolvable, Examples) {
  EXPECT_FALSE(square_solvable(1).has_value());
  EXPECT_EQ(square_solvable(2), Integer(5));
  EXPECT_EQ(square_solvable(4), Integer(7));
  for (long d = 1; d <= 40; ++d) EXPECT_EQ(square_solvable(d).has_value(), d % 2 == 0) << d;
}

TEST(PrimitiveEmbedding, Examples) {
  EXPECT_TRUE(primitive_embedding_exists({1, 1, bits({0})}));
  EXPECT_FALSE(primitive_embedding_exists({1, 1, bits({0, 1})}));
  EXPECT_FALSE(primitive_embedding_exists({5, 0, bits({3})}));
  EXPECT_TRUE(primitive_embedding_exists({2, 1, bits({0, 1})}));
}

TEST(PrimitiveEmbedding, AgreesWithFormOfComplement) {
  // An embedding exists iff the kernel's form is minus that of <8d>.
  std::mt19937_64 rng(5);
  for (long d : {1, 2, 3, 4}) {
    for (int t = 0; t < 6; ++t) {
      BrauerElement e{d, 1, static_cast<std::uint32_t>(rng() & 0xFFFFFu)};
      const auto target = discriminant_form(rank_one(8 * d)).negated();
      EXPECT_EQ(primitive_embedding_exists(e), disc_forms_isomorphic(brauer_kernel_form(e), target).has_value());
    }
  }
}

TEST(BrauerRank, Examples) {
  EXPECT_EQ(brauer_rank({2, 1, 2}), 2);
  EXPECT_EQ(brauer_rank({2, 2, 2}), 0);
  EXPECT_THROW(brauer_rank({0, 3, 1}), InvalidInput);
  EXPECT_THROW(brauer_rank({2, 1, 0}), InvalidInput);
}

TEST(Brauer2Class, ParityOfLambdaMattersForEvenDWhenAIsZero) {
  const auto gamma_alpha = discriminant_form(direct_sum({rank_one(-2), scaled(hyperbolic_plane(), 2)}));
  for (std::uint32_t lambda : {bits({0}), bits({0, 1})}) {
    EXPECT_TRUE(disc_forms_isomorphic(brauer_kernel_form({1, 0, lambda}), gamma_alpha).has_value());
  }
  EXPECT_FALSE(disc_forms_isomorphic(brauer_kernel_form({2, 0, bits({0})}),
                                     brauer_kernel_form({2, 0, bits({0, 1})}))
                   .has_value());
}
