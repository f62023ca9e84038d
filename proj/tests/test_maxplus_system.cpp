#include <gtest/gtest.h>

#include "hyperfact/maxplus_system.hpp"

using namespace hyperfact;

namespace {

using M = MaxPlusSystem;
TropValue L(long e) { return TropValue::log(e); }

TEST(MaxPlusSystem, TieWithConstant) {
  M m;
  const int x = m.add_variable(L(5));
  m.add_constraint({M::constant(L(2)), M::variable(x)});
  const auto sol = m.solve();
  ASSERT_TRUE(sol);
  EXPECT_EQ((*sol)[0], L(2));
}

TEST(MaxPlusSystem, InfeasibleWhenTopTooLow) {
  M m;
  const int x = m.add_variable(L(1));
  m.add_constraint({M::constant(L(2)), M::variable(x)});
  EXPECT_FALSE(m.solve());
  EXPECT_FALSE(m.hull());
}

TEST(MaxPlusSystem, HullOfThreeTermConstraint) {
  // max(1, x, y) attained twice, x, y <= 3: the solutions are x = y >= 1, or one
  // of them equal to 1 with the other below.
  M m;
  const int x = m.add_variable(L(3));
  const int y = m.add_variable(L(3));
  m.add_constraint({M::constant(L(1)), M::variable(x), M::variable(y)});
  const auto h = m.hull();
  ASSERT_TRUE(h);
  EXPECT_EQ(h->lower[0], TropValue::zero());
  EXPECT_EQ(h->upper[0], L(3));
  EXPECT_EQ(h->pieces, 3u);
  EXPECT_TRUE(m.satisfied_by({L(2), L(2)}));
  EXPECT_FALSE(m.satisfied_by({L(2), L(0)}));
}

TEST(MaxPlusSystem, OffsetsAndZeroWeights) {
  M m;
  const int x = m.add_variable(L(10));
  m.add_constraint({M::constant(TropValue::zero()), M::variable(x, TropValue::zero())});
  m.add_constraint({M::constant(L(4)), M::variable(x, L(1))});
  const auto sol = m.solve();
  ASSERT_TRUE(sol);
  EXPECT_EQ((*sol)[0], L(3));
}

TEST(MaxPlusSystem, NodeLimit) {
  M m;
  std::vector<int> v;
  for (int i = 0; i < 12; ++i) v.push_back(m.add_variable(L(3)));
  for (int i = 1; i < 12; ++i)
    m.add_constraint({M::constant(L(i % 3)), M::variable(v[i]), M::variable(v[i - 1], L(1))});
  m.set_node_limit(5);
  try {
    (void)m.hull();
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::SearchLimitExceeded);
  }
}

}  // namespace
