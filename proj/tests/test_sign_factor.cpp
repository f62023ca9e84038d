#include <gtest/gtest.h>

#include <set>

#include "hyperfact/hyperfact.hpp"
#include "oracles.hpp"

using namespace hyperfact;

namespace {

using S = SignValue;
SignPoly sp(const char* text) { return parse_polynomial<SignField>(text); }

std::vector<SignPoly> polys(std::initializer_list<const char*> texts) {
  std::vector<SignPoly> out;
  for (const char* t : texts) out.push_back(sp(t));
  return out;
}

TEST(DivideSign, Examples) {
  EXPECT_EQ(sign_division_params(sp("T^3+T^2+T+1"), S::minus), (SignDivisionParams{0, 0}));
  EXPECT_EQ(divide_sign(sp("T^3+T^2+T+1"), S::minus), sp("T^2+T+1"));
  EXPECT_EQ(sign_division_params(sp("T^2-1"), S::plus), (SignDivisionParams{0, 1}));
  EXPECT_EQ(divide_sign(sp("T^2-1"), S::plus), sp("T+1"));
  const SignPoly shifted = divide_sign(sp("T^3-T"), S::zero);
  EXPECT_EQ(shifted, sp("T^2-1"));
  EXPECT_EQ(divide_sign(shifted, S::plus), sp("T+1"));
}

TEST(DivideSign, Errors) {
  try {
    divide_sign(sp("T^2+1"), S::plus);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotARoot);
  }
  try {
    divide_sign(sp("1"), S::plus);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::ConstantPolynomial);
  }
}

TEST(AllQuotients, CubicAtMinusOne) {
  EXPECT_EQ(all_quotients_sign(sp("T^3+T^2+T+1"), S::minus), polys({"T^2-T+1", "T^2+1", "T^2+T+1"}));
  EXPECT_EQ(all_quotients_sign(sp("T-1"), S::plus), polys({"1"}));
  EXPECT_TRUE(all_quotients_sign(sp("T^2+1"), S::plus).empty());
}

TEST(AllQuotients, MatchesLiteralScanUpToDegreeSix) {
  for (std::size_t n = 1; n <= 6; ++n)
    for (const auto& v : oracle::sign_vectors(n))
      for (int a = -1; a <= 1; ++a) {
        std::set<std::vector<int>> got;
        for (const SignPoly& q : all_quotients_sign(oracle::poly(v), sign_of(a))) got.insert(oracle::ints(q));
        ASSERT_EQ(got, oracle::sign_quotients(v, a)) << format_polynomial(oracle::poly(v)) << " a=" << a;
      }
}

TEST(AllQuotients, DegreeBound) {
  const SignPoly big = SignPoly::monomial(S::plus, 13);
  try {
    all_quotients_sign(big, S::zero);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::DegreeBoundExceeded);
  }
  EXPECT_THROW(all_quotients_sign(sp("T^5+1"), S::minus, 4), Error);
}

TEST(DivideSign, SoundAndReflectedUpToDegreeSix) {
  for (std::size_t n = 1; n <= 6; ++n)
    for (const auto& v : oracle::sign_vectors(n)) {
      const SignPoly p = oracle::poly(v);
      for (int a : {-1, 1}) {
        ASSERT_EQ(is_root(p, sign_of(a)), oracle::sign_is_root(v, a));
        if (!oracle::sign_is_root(v, a)) continue;
        const SignPoly q = divide_sign(p, sign_of(a));
        EXPECT_EQ(oracle::sign_quotients(v, a).count(oracle::ints(q)), 1u) << format_polynomial(p) << " a=" << a;
      }
      if (is_root(p, S::minus)) {
        const SignPoly mirrored = scale(S::minus, reflect(divide_sign(reflect(p), S::plus)));
        EXPECT_EQ(mirrored, divide_sign(p, S::minus));
      }
    }
}

TEST(DivisionSweep, LibrarySweepPasses) {
  const DivisionSweepReport r = sweep_sign_division(6);
  EXPECT_TRUE(r.passed()) << (r.failures.empty() ? "" : r.failures[0]);
  EXPECT_GT(r.cases, 1000u);
}

TEST(Irreducible, Examples) {
  EXPECT_TRUE(is_irreducible_sign(sp("T^2+1")));
  EXPECT_FALSE(is_irreducible_sign(sp("T^2+T+1")));
  EXPECT_FALSE(is_irreducible_sign(sp("T^2-T+1")));
  EXPECT_TRUE(is_irreducible_sign(sp("T-1")));
  EXPECT_TRUE(is_irreducible_sign(sp("-T^2-1")));
}

TEST(Irreducible, MatchesOracleUpToDegreeFour) {
  for (std::size_t n = 1; n <= 4; ++n)
    for (const auto& v : oracle::sign_vectors(n))
      EXPECT_EQ(is_irreducible_sign(oracle::poly(v)), !oracle::sign_reducible(v)) << format_polynomial(oracle::poly(v));
}

TEST(ClassifyIrreducibles, Degrees) {
  EXPECT_EQ(classify_irreducibles(1), polys({"T-1", "T", "T+1"}));
  EXPECT_EQ(classify_irreducibles(2), polys({"T-1", "T", "T+1", "T^2+1"}));
  EXPECT_EQ(classify_irreducibles(4), polys({"T-1", "T", "T+1", "T^2+1"}));
}

TEST(QuadraticCubicCriterion, IrreducibleIffRootless) {
  for (std::size_t n = 2; n <= 3; ++n)
    for (const auto& v : oracle::sign_vectors(n)) {
      bool rootless = true;
      for (int a = -1; a <= 1; ++a) rootless = rootless && !oracle::sign_is_root(v, a);
      EXPECT_EQ(is_irreducible_sign(oracle::poly(v)), rootless) << format_polynomial(oracle::poly(v));
    }
}

TEST(Factorizations, CubicHasThree) {
  const auto fs = all_factorizations_sign(sp("T^3+T^2+T+1"));
  ASSERT_EQ(fs.size(), 3u);
  EXPECT_EQ(fs[0].factors, polys({"T-1", "T-1", "T+1"}));
  EXPECT_EQ(fs[0].witness_nesting, "(((T-1)*(T-1))*(T+1))");
  EXPECT_EQ(fs[1].factors, polys({"T+1", "T+1", "T+1"}));
  EXPECT_EQ(fs[2].factors, polys({"T+1", "T^2+1"}));
  for (const SignFactorization& f : fs) EXPECT_EQ(f.unit, S::plus);
}

TEST(Factorizations, SmallCases) {
  const auto a = all_factorizations_sign(sp("T^2+T+1"));
  ASSERT_EQ(a.size(), 1u);
  EXPECT_EQ(a[0].factors, polys({"T+1", "T+1"}));
  const auto b = all_factorizations_sign(sp("T^2+1"));
  ASSERT_EQ(b.size(), 1u);
  EXPECT_EQ(b[0].factors, polys({"T^2+1"}));
  EXPECT_EQ(b[0].witness_nesting, "T^2+1");
  const auto c = all_factorizations_sign(sp("-T^2+1"));
  ASSERT_EQ(c.size(), 1u);
  EXPECT_EQ(c[0].unit, S::minus);
  EXPECT_EQ(c[0].factors, polys({"T-1", "T+1"}));
}

TEST(Factorizations, UniqueUpToDegreeTwo) {
  for (std::size_t n = 1; n <= 2; ++n)
    for (const SignPoly& p : sign_polynomials_of_degree(n))
      EXPECT_EQ(all_factorizations_sign(p).size(), 1u) << format_polynomial(p);
}

// Evaluates a bracketing such as "(((T-1)*(T-1))*(T+1))" to its product set.
class NestingEvaluator {
 public:
  explicit NestingEvaluator(std::string text) : text_(std::move(text)) {}

  std::vector<SignPoly> evaluate() {
    auto out = expr();
    EXPECT_EQ(pos_, text_.size()) << text_;
    return out;
  }

 private:
  std::vector<SignPoly> expr() {
    if (text_[pos_] != '(') return {leaf()};
    ++pos_;
    std::vector<SignPoly> left = expr();
    if (text_[pos_] == '*') {
      ++pos_;
      std::vector<SignPoly> right = expr();
      ++pos_;  // ')'
      std::set<SignPoly> acc;
      for (const SignPoly& x : left)
        for (const SignPoly& y : right)
          for (const SignPoly& r : enumerate_product(x, y)) acc.insert(r);
      return {acc.begin(), acc.end()};
    }
    ++pos_;  // ')'
    return left;
  }

  SignPoly leaf() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && text_[pos_] != '*' && text_[pos_] != ')') ++pos_;
    return sp(text_.substr(start, pos_ - start).c_str());
  }

  std::string text_;
  std::size_t pos_ = 0;
};

TEST(Factorizations, WitnessesReproduceTheProduct) {
  for (std::size_t n = 1; n <= 5; ++n)
    for (const SignPoly& p : sign_polynomials_of_degree(n))
      for (const SignFactorization& f : all_factorizations_sign(p)) {
        const auto set = NestingEvaluator(f.witness_nesting).evaluate();
        EXPECT_TRUE(std::binary_search(set.begin(), set.end(), scale(f.unit, p)))
            << format_polynomial(p) << " " << f.witness_nesting;
      }
}

TEST(Factorizations, LeftNestedOrdersAreFound) {
  // Any multiset with a left-nested ordering containing p is reported.
  const std::vector<SignPoly> atoms = classify_irreducibles(2);
  for (const SignPoly& p : sign_polynomials_of_degree(3, true)) {
    std::set<std::vector<SignPoly>> reported;
    for (const SignFactorization& f : all_factorizations_sign(p)) reported.insert(f.factors);
    for (std::size_t i = 0; i < atoms.size(); ++i)
      for (std::size_t j = 0; j < atoms.size(); ++j)
        for (std::size_t k = 0; k < atoms.size(); ++k) {
          std::vector<SignPoly> fs{atoms[i], atoms[j], atoms[k]};
          if (atoms[i].deg() + atoms[j].deg() + atoms[k].deg() != 3) continue;
          if (!in_product(p, std::span<const SignPoly>(fs))) continue;
          std::sort(fs.begin(), fs.end(), degree_then_canonical<SignField>);
          EXPECT_EQ(reported.count(fs), 1u) << format_polynomial(p);
        }
  }
}

TEST(Multiplicity, Examples) {
  EXPECT_EQ(multiplicity_sign(sp("T^3+T^2+T+1"), S::minus), 3u);
  EXPECT_EQ(multiplicity_sign(sp("T^2+1"), S::plus), 0u);
  EXPECT_EQ(multiplicity_sign(sp("T-1"), S::plus), 1u);
  EXPECT_EQ(multiplicity_sign(sp("T^3-T"), S::zero), 1u);
}

TEST(IrreducibleFactors, SomeFactorIsAssociated) {
  // For irreducible p and any three-factor left-nested product containing p,
  // one of the factors is associated to p.
  for (std::size_t n = 1; n <= 2; ++n)
    for (const SignPoly& p : sign_polynomials_of_degree(n)) {
      if (!is_irreducible_sign(p)) continue;
      for (std::size_t d1 = 0; d1 <= n; ++d1)
        for (std::size_t d2 = 0; d1 + d2 <= n; ++d2)
          for (const SignPoly& q1 : sign_polynomials_of_degree(d1))
            for (const SignPoly& q2 : sign_polynomials_of_degree(d2))
              for (const SignPoly& q3 : sign_polynomials_of_degree(n - d1 - d2)) {
                const SignPoly fs[] = {q1, q2, q3};
                if (!in_product(p, std::span<const SignPoly>(fs))) continue;
                EXPECT_TRUE(associated(p, q1) || associated(p, q2) || associated(p, q3));
              }
    }
}

}  // namespace
