#include <gtest/gtest.h>

#include "hyperfact/axioms.hpp"

using namespace hyperfact;

namespace {

TEST(SignAxioms, ExhaustiveSuitePasses) {
  const AxiomReport r = check_sign_axioms();
  EXPECT_EQ(r.triples, 27u);
  for (const LawResult& law : r.laws) {
    EXPECT_TRUE(law.passed()) << law.law << ": " << (law.counterexamples.empty() ? "" : law.counterexamples[0]);
    EXPECT_GT(law.instances, 0u) << law.law;
  }
}

TEST(SignAxioms, CoversEveryLaw) {
  const AxiomReport r = check_sign_axioms();
  std::vector<std::string> names;
  for (const LawResult& law : r.laws) names.push_back(law.law);
  for (const char* expected : {"HF2 distributive", "HG1", "HG2", "HG3", "HG4", "HG5", "HG6"}) {
    bool found = false;
    for (const std::string& n : names) found = found || n.rfind(expected, 0) == 0;
    EXPECT_TRUE(found) << expected;
  }
}

TEST(TropicalAxioms, SampledSuitePasses) {
  const AxiomReport r = check_tropical_axioms(2000, 11);
  EXPECT_EQ(r.triples, 64u + 2000u);
  EXPECT_TRUE(r.passed()) << r.failure_count();
}

TEST(TropicalAxioms, DispatchUsesBudget) {
  EXPECT_EQ(check_axioms(FieldKind::tropical, 10).triples, 74u);
  EXPECT_EQ(check_axioms(FieldKind::sign).field, FieldKind::sign);
}

}  // namespace
