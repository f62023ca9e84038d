#include <gtest/gtest.h>

#include "hyperfact/hyperfact.hpp"

using namespace hyperfact;

namespace {

using S = SignValue;
TropValue L(long e) { return TropValue::log(e); }
const TropValue Z = TropValue::zero();

SignPoly sp(const char* text) { return parse_polynomial<SignField>(text); }

TEST(Degree, Basics) {
  EXPECT_EQ(sp("T^3+T^2+T+1").degree(), 3u);
  EXPECT_EQ(SignPoly::constant(S::plus).degree(), 0u);
  EXPECT_FALSE(SignPoly().degree().has_value());
  EXPECT_THROW((void)SignPoly().deg(), Error);
}

TEST(Degree, TrailingZerosAreTrimmed) {
  EXPECT_EQ(SignPoly({S::plus, S::zero, S::zero}), SignPoly::constant(S::plus));
  EXPECT_EQ(TropPoly({L(0), Z}).degree(), 0u);
  EXPECT_TRUE(TropPoly({Z, Z}).is_zero());
}

TEST(ProductCoefficientSets, SignExample) {
  const auto sets = product_coefficient_sets(sp("T+1"), sp("T-1"));
  ASSERT_EQ(sets.size(), 3u);
  EXPECT_EQ(sets[0], SignSubset{S::minus});
  EXPECT_EQ(sets[1], SignSubset::full());
  EXPECT_EQ(sets[2], SignSubset{S::plus});
}

TEST(ProductCoefficientSets, TropicalTieGivesInterval) {
  // (T + 1)(T + 1): middle coefficient is 1·1 ⊞ 1·1 = [0, 1] in log coordinate 0... i.e. [zero, 0].
  const TropPoly lin = TropPoly::linear(L(0));
  const auto sets = product_coefficient_sets(lin, lin);
  EXPECT_EQ(sets[1], TropSubset::interval(L(0)));
  EXPECT_THROW(product_coefficient_sets(lin, TropPoly()), Error);
}

TEST(InProduct, TwoFactors) {
  EXPECT_TRUE(in_product(sp("T^3+T^2+T+1"), sp("T+1"), sp("T^2+1")));
  EXPECT_TRUE(in_product(sp("T^2+T+1"), sp("T+1"), sp("T+1")));
  EXPECT_FALSE(in_product(sp("T^2-T+1"), sp("T+1"), sp("T+1")));
  EXPECT_FALSE(in_product(sp("T^2+1"), sp("T+1"), sp("T^2+1")));
}

TEST(InProduct, ProductLaws) {
  const SignPoly p = sp("T^2-T");
  const SignPoly one = SignPoly::constant(S::plus);
  EXPECT_EQ(enumerate_product(p, one), std::vector<SignPoly>{p});
  EXPECT_EQ(enumerate_product(sp("T+1"), sp("T-1")), enumerate_product(sp("T-1"), sp("T+1")));
  EXPECT_FALSE(enumerate_product(sp("T+1"), sp("T-1")).empty());
}

TEST(IsRoot, Examples) {
  EXPECT_TRUE(is_root(sp("T^3+T^2+T+1"), S::minus));
  EXPECT_FALSE(is_root(sp("T^2+1"), S::plus));
  EXPECT_TRUE(is_root(TropPoly({Z, L(1)}), Z));
  EXPECT_TRUE(is_root(TropPoly({L(1), L(0)}), L(1)));
  EXPECT_FALSE(is_root(TropPoly({L(1), L(0)}), L(2)));
  EXPECT_FALSE(is_root(SignPoly::constant(S::plus), S::plus));
}

TEST(Associated, Examples) {
  const TropPoly lin = TropPoly::linear(L(1));
  EXPECT_TRUE(associated(scale(L(3), lin), lin));
  EXPECT_FALSE(associated(sp("T+1"), sp("T-1")));
  EXPECT_TRUE(associated(sp("-T+1"), sp("T-1")));
}

TEST(LinearQuotient, Relation) {
  EXPECT_TRUE(is_linear_quotient(sp("T^3+T^2+T+1"), S::minus, sp("T^2+T+1")));
  EXPECT_TRUE(is_linear_quotient(sp("T^2-1"), S::plus, sp("T+1")));
  EXPECT_FALSE(is_linear_quotient(sp("T^2-1"), S::plus, sp("T-1")));
  EXPECT_FALSE(is_linear_quotient(sp("T^2-1"), S::plus, sp("T^2")));
}

TEST(Pushforward, SignMapOnRationals) {
  const std::vector<Rational> p{0, -5, 3};
  const auto image = pushforward<SignField>(p, [](const Rational& c) { return sign_map(c); });
  EXPECT_EQ(image.image, sp("T^2-T"));
  EXPECT_FALSE(image.degree_dropped);
}

TEST(Pushforward, IdentityMorphism) {
  const TropPoly p({L(1), Z, L(-2)});
  const auto image = pushforward<TropicalField>(p.coeffs(), [](const TropValue& v) { return v; });
  EXPECT_EQ(image.image, p);
}

TEST(Ordering, DegreeThenCanonical) {
  std::vector<SignPoly> ps{sp("T^2+1"), sp("T+1"), sp("T"), sp("T-1")};
  std::sort(ps.begin(), ps.end(), degree_then_canonical<SignField>);
  EXPECT_EQ(ps, (std::vector<SignPoly>{sp("T-1"), sp("T"), sp("T+1"), sp("T^2+1")}));
}

}  // namespace
