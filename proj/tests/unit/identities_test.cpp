#include <gtest/gtest.h>

#include <algorithm>

#include <nlohmann/json.hpp>

#include "eqrim/error.hpp"
#include "eqrim/identities.hpp"

namespace eqrim {
namespace {

std::string describe(const IdentityReport& r) { return to_table(r); }

TEST(IdentitySingleCases, Examples) {
  auto phisum = verify_phisum(2, 4, Partition{3, 1});
  EXPECT_TRUE(phisum.passed()) << describe(phisum);
  EXPECT_EQ(phisum.cases_checked, 1u);
  EXPECT_TRUE(verify_phisum(2, 4, Partition{2, 1}).passed());

  auto main_id = verify_main_id(Partition{2, 1}, Partition{2}, Partition{}, 1, 2, 4);
  EXPECT_TRUE(main_id.passed()) << describe(main_id);
  EXPECT_EQ(main_id.cases_checked, 1u);
  auto vanishing = verify_main_id(Partition{1, 1}, Partition{2}, Partition{}, 1, 2, 4);
  EXPECT_TRUE(vanishing.passed());

  auto rec = verify_recursion(Partition{1}, Partition{2}, Partition{2, 1}, 0, 2, 4);
  EXPECT_TRUE(rec.passed()) << describe(rec);
  EXPECT_EQ(rec.cases_checked, 1u);
  auto same = verify_recursion(Partition{2, 1}, Partition{1}, Partition{2, 1}, 0, 2, 4);
  EXPECT_EQ(same.skipped, 1u);
  EXPECT_EQ(same.cases_checked, 0u);
  ASSERT_FALSE(same.notes.empty());
  EXPECT_NE(same.notes.front().find("denominator vanishes"), std::string::npos);

  EXPECT_TRUE(verify_eqvt_coeff(Partition{3, 1}, 2, 4).passed());
  EXPECT_TRUE(verify_eqvt_coeff(Partition{2, 2}, 2, 4).passed());
}

class SuiteAtTwoFour : public ::testing::TestWithParam<std::string> {};

TEST_P(SuiteAtTwoFour, PassesExhaustively) {
  for (const auto& r : run_suite(GetParam(), 2, 4)) {
    EXPECT_TRUE(r.passed()) << describe(r);
    EXPECT_GT(r.cases_checked, 0u) << r.name;
  }
}

INSTANTIATE_TEST_SUITE_P(AllSuites, SuiteAtTwoFour, ::testing::ValuesIn(suite_names()),
                         [](const auto& info) {
                           std::string s = info.param;
                           std::replace(s.begin(), s.end(), '-', '_');
                           return s;
                         });

TEST(Suites, OneBoxAssociativityAtLargerRanks) {
  for (auto [k, n] : {std::pair{2, 5}, {3, 6}}) {
    auto r = verify_one_box_associativity(k, n);
    EXPECT_TRUE(r.passed()) << describe(r);
  }
}

TEST(Suites, SamplingIsSeededAndReported) {
  VerifyOptions o;
  o.sample = 50;
  o.seed = 4;
  auto a = verify_recursion(2, 5, o);
  auto b = verify_recursion(2, 5, o);
  EXPECT_EQ(a.cases_checked + a.skipped, 50u);
  EXPECT_EQ(a.cases_checked, b.cases_checked);
  EXPECT_EQ(a.range, b.range);
  EXPECT_NE(a.range.find("seed 4"), std::string::npos);
  EXPECT_TRUE(a.passed()) << describe(a);
}

TEST(Suites, ParallelRunsGiveTheSameReport) {
  VerifyOptions serial, threaded;
  threaded.jobs = 3;
  auto a = verify_main_id(2, 4, serial);
  auto b = verify_main_id(2, 4, threaded);
  EXPECT_EQ(a.cases_checked, b.cases_checked);
  EXPECT_EQ(a.skipped, b.skipped);
  EXPECT_EQ(a.notes, b.notes);
}

TEST(Suites, UnknownSuiteIsAnInputError) { EXPECT_THROW(run_suite("nope", 2, 4), InputError); }

TEST(Reports, JsonAndTable) {
  IdentityReport r;
  r.name = "demo";
  r.range = "somewhere";
  r.cases_checked = 3;
  r.failures.push_back({"x=1", "a", "b"});
  nlohmann::json j = r;
  EXPECT_EQ(j["name"], "demo");
  EXPECT_EQ(j["passed"], false);
  EXPECT_EQ(j["failures"][0]["lhs"], "a");
  std::string table = to_table(r);
  EXPECT_EQ(table.rfind("FAIL demo", 0), 0u) << table;
  EXPECT_NE(table.find("x=1"), std::string::npos);
}

TEST(OrdinaryLr, SmallCases) {
  auto c = ordinary_lr(Partition{1}, Partition{1}, 2);
  EXPECT_EQ(c.at(Partition{2}), 1);
  EXPECT_EQ(c.at(Partition{1, 1}), 1);
  auto d = ordinary_lr(Partition{2, 1}, Partition{2, 1}, 3);
  EXPECT_EQ(d.at(Partition{3, 2, 1}), 2);
}

}  // namespace
}  // namespace eqrim
