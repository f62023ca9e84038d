#include <gtest/gtest.h>

#include <random>
#include <set>

#include "hyperfact/hyperfact.hpp"
#include "oracles.hpp"

using namespace hyperfact;

namespace {

using S = SignValue;
SignPoly sp(const char* text) { return parse_polynomial<SignField>(text); }
TropValue L(long e) { return TropValue::log(e); }

TEST(SignProduct, CubicWithThreeFactorizations) {
  const SignPoly p = sp("T^3+T^2+T+1");
  EXPECT_TRUE(in_product(p, {sp("T+1"), sp("T^2+1")}));
  EXPECT_TRUE(in_product(p, {sp("T+1"), sp("T+1"), sp("T+1")}));
  // Left nesting matters: the product is not associative.
  EXPECT_FALSE(in_product(p, {sp("T+1"), sp("T-1"), sp("T-1")}));
  EXPECT_TRUE(in_product(p, {sp("T-1"), sp("T-1"), sp("T+1")}));
  EXPECT_EQ(enumerate_product(sp("T-1"), sp("T-1")), std::vector<SignPoly>{sp("T^2-T+1")});
  EXPECT_EQ(enumerate_product(sp("T+1"), sp("T+1")), std::vector<SignPoly>{sp("T^2+T+1")});
}

TEST(SignProduct, EnumerationMatchesScanningOracle) {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> deg(1, 2);
  for (int trial = 0; trial < 150; ++trial) {
    std::vector<std::vector<int>> factors;
    std::vector<SignPoly> polys;
    const int count = trial % 3 + 2;
    for (int j = 0; j < count; ++j) {
      const auto all = oracle::sign_vectors(static_cast<std::size_t>(deg(rng)));
      factors.push_back(all[std::uniform_int_distribution<std::size_t>(0, all.size() - 1)(rng)]);
      polys.push_back(oracle::poly(factors.back()));
    }
    const auto expected = oracle::sign_product_set(factors);
    std::set<std::vector<int>> got;
    for (const SignPoly& r : enumerate_product(std::span<const SignPoly>(polys))) got.insert(oracle::ints(r));
    EXPECT_EQ(got, expected);
    // The search-based membership test agrees on every candidate of the right degree.
    std::size_t total = 0;
    for (const auto& f : factors) total += f.size() - 1;
    for (const auto& r : oracle::sign_vectors(total))
      EXPECT_EQ(in_product(oracle::poly(r), std::span<const SignPoly>(polys)), expected.count(r) == 1);
  }
}

TEST(SignProduct, DegreeBound) {
  const std::vector<SignPoly> many(13, sp("T+1"));
  try {
    enumerate_product(std::span<const SignPoly>(many));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::DegreeBoundExceeded);
  }
}

TEST(SignProduct, ZeroOperand) {
  EXPECT_THROW(in_product(sp("T"), {sp("T"), SignPoly()}), Error);
}

TropPoly random_trop(std::mt19937_64& rng, std::size_t degree, long lo, long hi) {
  std::uniform_int_distribution<long> e(lo, hi);
  std::uniform_int_distribution<int> zero(0, 4);
  std::vector<TropValue> c;
  for (std::size_t i = 0; i < degree; ++i) c.push_back(zero(rng) == 0 ? TropValue::zero() : L(e(rng)));
  c.push_back(L(e(rng)));
  return TropPoly(c);
}

TEST(TropicalProduct, LinearFactorsMatchSubsetOracle) {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<long> e(-2, 2);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = static_cast<std::size_t>(trial % 3 + 3);
    std::vector<TropValue> roots;
    std::vector<TropPoly> factors;
    for (std::size_t j = 0; j < n; ++j) {
      roots.push_back(L(e(rng)));
      factors.push_back(TropPoly::linear(roots.back()));
    }
    const TropPoly r = random_trop(rng, n, -4, 4);
    const bool expected = oracle::trop_linear_product_contains(r, roots);
    EXPECT_EQ(in_product(r, std::span<const TropPoly>(factors)), expected) << format_polynomial(r);
  }
}

TEST(TropicalProduct, MatchesGridOracle) {
  std::mt19937_64 rng(9);
  std::uniform_int_distribution<int> deg(1, 2);
  int members = 0;
  for (int trial = 0; trial < 120; ++trial) {
    std::vector<TropPoly> factors;
    std::size_t total = 0;
    for (int j = 0; j < 3; ++j) {
      factors.push_back(random_trop(rng, static_cast<std::size_t>(deg(rng)), -1, 1));
      total += factors.back().deg();
    }
    // Half of the targets are built as a member of the product, half at random.
    TropPoly r = random_trop(rng, total, -2, 2);
    if (trial % 2 == 0) {
      const auto s = product_coefficient_sets(factors[0], factors[1]);
      std::vector<TropValue> mid;
      for (const TropSubset& set : s) mid.push_back(set.top());
      const auto t = product_coefficient_sets(TropPoly(mid), factors[2]);
      std::vector<TropValue> out;
      for (const TropSubset& set : t) out.push_back(set.top());
      r = TropPoly(out);
    }
    const bool expected = oracle::trop_in_product_grid(r, factors, -8, 4);
    members += expected;
    EXPECT_EQ(in_product(r, std::span<const TropPoly>(factors)), expected) << format_polynomial(r);
  }
  EXPECT_GT(members, 20);
}

}  // namespace
