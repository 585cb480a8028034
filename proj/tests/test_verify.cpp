#include <gtest/gtest.h>

#include "facecode/constructors.hpp"
#include "facecode/corpus.hpp"
#include "facecode/verify.hpp"

using namespace facecode;

namespace {

const std::vector<SimplePolytope>& shared_corpus() {
  static const auto ps = corpus();
  return ps;
}

std::string failures_of(const SuiteReport& rep) {
  std::string out;
  for (const auto& c : rep.checks) {
    if (!c.passed) out += c.suite + " " + c.subject + " " + c.check + " " + c.detail + "\n";
  }
  return out;
}

}  // namespace

TEST(Corpus, Size) {
  EXPECT_EQ(corpus_recipes().size(), 28U);
  EXPECT_EQ(shared_corpus().size(), 28U);
}

class SuiteOnCorpus : public ::testing::TestWithParam<std::string> {};

TEST_P(SuiteOnCorpus, AllChecksPass) {
  const auto rep = run_suite(GetParam(), shared_corpus(), 20);
  EXPECT_FALSE(rep.checks.empty());
  EXPECT_EQ(rep.failures(), 0U) << failures_of(rep);
  EXPECT_EQ(rep.exit_code(), 0);
  for (const auto& c : rep.checks) EXPECT_EQ(c.suite, GetParam());
}

INSTANTIATE_TEST_SUITE_P(Suites, SuiteOnCorpus, ::testing::ValuesIn(suite_names()));

TEST(Suites, UnknownName) {
  try {
    run_suite("nope", shared_corpus());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::InvalidInput);
  }
}

TEST(Suites, AllIsTheUnion) {
  std::size_t total = 0;
  for (const auto& s : suite_names()) total += run_suite(s, shared_corpus(), 3).checks.size();
  EXPECT_EQ(run_suite("all", shared_corpus(), 3).checks.size(), total);
}

TEST(Suites, ObservationsRecordTheTwoDimensionalAnomaly) {
  const auto rep = run_suite("colorability", {polygon(5)});
  EXPECT_FALSE(rep.observations.empty());
  EXPECT_EQ(rep.failures(), 0U) << failures_of(rep);
}

TEST(SuiteReport, ExitCodes) {
  SuiteReport rep;
  rep.checks.push_back({"s", "p", "ok", true, std::nullopt, ""});
  EXPECT_EQ(rep.exit_code(), 0);
  rep.checks.push_back({"s", "p", "slow", false, ErrorKind::BudgetExceeded, ""});
  EXPECT_EQ(rep.exit_code(), 2);
  rep.checks.push_back({"s", "p", "wrong", false, std::nullopt, ""});
  EXPECT_EQ(rep.exit_code(), 3);
  EXPECT_EQ(rep.failures(), 2U);
}
