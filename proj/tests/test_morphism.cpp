#include <gtest/gtest.h>

#include "hyperfact/hyperfact.hpp"

using namespace hyperfact;

namespace {

using S = SignValue;
SignPoly sp(const char* text) { return parse_polynomial<SignField>(text); }
TropValue L(long e) { return TropValue::log(e); }

TEST(SignMap, Examples) {
  EXPECT_EQ(sign_map(Rational(-5)), S::minus);
  EXPECT_EQ(sign_map(Rational(0)), S::zero);
  EXPECT_EQ(sign_map(Rational(7, 3)), S::plus);
}

TEST(Valuation, Examples) {
  EXPECT_EQ(t_adic_valuation(LaurentPoly{{2, Rational(1)}}), L(-2));
  EXPECT_EQ(t_adic_valuation(LaurentPoly{{0, Rational(3)}, {1, Rational(1)}}), L(0));
  EXPECT_EQ(t_adic_valuation(LaurentPoly{}), TropValue::zero());
  EXPECT_EQ(t_adic_valuation(LaurentPoly{{-3, Rational(1, 2)}}), L(3));
}

TEST(MorphismLaws, BothMapsPass) {
  for (Morphism m : {Morphism::sign, Morphism::valuation}) {
    const MorphismLawReport r = check_morphism_laws(m, 2000);
    EXPECT_TRUE(r.passed()) << to_string(m) << ": " << (r.failures.empty() ? "" : r.failures[0]);
  }
}

TEST(Pushforward, HandExamples) {
  // (T+1)(T+2) = T^2+3T+2.
  const RationalPoly product = RationalPoly{1, 1} * RationalPoly{2, 1};
  EXPECT_EQ(product, (RationalPoly{2, 3, 1}));
  EXPECT_EQ(push_sign(product), sp("T^2+T+1"));
  EXPECT_TRUE(in_product(push_sign(product), sp("T+1"), sp("T+1")));

  // (T+t)(T+t^2) = T^2 + (t+t^2)T + t^3.
  const LaurentCoeffPoly a{{{1, Rational(1)}}, {{0, Rational(1)}}};
  const LaurentCoeffPoly b{{{2, Rational(1)}}, {{0, Rational(1)}}};
  const TropPoly image = push_valuation(a * b);
  EXPECT_EQ(image, TropPoly({L(-3), L(-1), L(0)}));
  EXPECT_TRUE(in_product(image, push_valuation(a), push_valuation(b)));
}

TEST(Pushforward, RandomTrialsPass) {
  for (Morphism m : {Morphism::sign, Morphism::valuation}) {
    const PushforwardReport r = check_pushforward_lemma(200, 99, m);
    EXPECT_TRUE(r.passed()) << to_string(m);
    EXPECT_EQ(r.trials, 200u);
  }
}

TEST(Pushforward, ReportIsDeterministic) {
  const Json a = to_json(check_pushforward_lemma(50, 4, Morphism::valuation));
  const Json b = to_json(check_pushforward_lemma(50, 4, Morphism::valuation));
  EXPECT_EQ(a.dump(), b.dump());
  EXPECT_EQ(a["seed"], 4);
  EXPECT_TRUE(a["failures"].empty());
}

TEST(Nonuniqueness, RealPairCollides) {
  const NonuniquenessReport r = nonuniqueness_witness();
  EXPECT_EQ(r.image_first, sp("T^3+T^2+T+1"));
  EXPECT_EQ(r.image_second, sp("T^3+T^2+T+1"));
  EXPECT_EQ(r.factors_first, (std::vector<SignPoly>{sp("T+1"), sp("T^2+1")}));
  EXPECT_EQ(r.factors_second, (std::vector<SignPoly>{sp("T+1"), sp("T+1"), sp("T+1")}));
  EXPECT_TRUE(r.passed());
}

}  // namespace
