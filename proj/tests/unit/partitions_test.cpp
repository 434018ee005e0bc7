#include <gtest/gtest.h>

#include <random>
#include <set>

#include "eqrim/error.hpp"
#include "eqrim/partition.hpp"
#include "oracles.hpp"

namespace eqrim {
namespace {

TPoly t(int i) { return TPoly::variable(i); }

TEST(Partition, ParsingAndPrinting) {
  EXPECT_EQ(parse_partition("2,1"), (Partition{2, 1}));
  EXPECT_EQ(parse_partition("(3, 1)"), (Partition{3, 1}));
  EXPECT_EQ(parse_partition("2 2"), (Partition{2, 2}));
  EXPECT_EQ(parse_partition("0"), Partition{});
  EXPECT_EQ(parse_partition("2,0"), Partition{2});
  EXPECT_EQ(to_string(Partition{}), "0");
  EXPECT_EQ(to_string(Partition{3, 1}), "3,1");
  EXPECT_THROW(parse_partition("1,2"), ParseError);
  EXPECT_THROW(parse_partition("a"), ParseError);
  EXPECT_THROW(Partition({1, 2}), InputError);
}

TEST(Partition, BoxMembership) {
  EXPECT_TRUE(in_box(Partition{2, 2}, 2, 4));
  EXPECT_FALSE(in_box(Partition{3}, 2, 4));
  EXPECT_TRUE(in_box(Partition{}, 0, 3));
  EXPECT_FALSE(in_box(Partition{1, 1, 1}, 2, 4));
  EXPECT_THROW(require_in_box(Partition{3}, 2, 4), DomainError);
}

TEST(Partition, BoxEnumerationMatchesOracle) {
  for (auto [k, n] : {std::pair{2, 4}, {2, 5}, {3, 6}, {3, 8}, {1, 3}}) {
    auto lib = partitions_in_box(k, n);
    auto ref = oracle::box(k, n);
    EXPECT_EQ(std::set<Partition>(lib.begin(), lib.end()), std::set<Partition>(ref.begin(), ref.end()));
    EXPECT_EQ(lib.size(), ref.size());
  }
}

TEST(Partition, Covers) {
  EXPECT_EQ(covers(Partition{}, 2, 4), std::vector<Partition>{Partition{1}});
  EXPECT_EQ(covers(Partition{2, 1}, 2, 4), std::vector<Partition>{(Partition{2, 2})});
  EXPECT_TRUE(covers(Partition{2, 2}, 2, 4).empty());
  for (const auto& p : partitions_in_box(3, 7))
    for (const auto& c : covers(p, 3, 7)) {
      EXPECT_EQ(c.boxes(), p.boxes() + 1);
      EXPECT_TRUE(c.contains(p));
      auto down = lower_covers(c);
      EXPECT_NE(std::find(down.begin(), down.end(), p), down.end());
    }
}

TEST(Partition, UpwardStepsAndWeights) {
  EXPECT_EQ(upward_steps(Partition{}, 2, 4), (std::vector<int>{1, 2}));
  EXPECT_EQ(upward_steps(Partition{2}, 2, 4), (std::vector<int>{1, 4}));
  EXPECT_EQ(upward_steps(Partition{2, 2}, 2, 4), (std::vector<int>{3, 4}));
  EXPECT_TRUE(equiv_weight(Partition{}, 2, 4).is_zero());
  EXPECT_EQ(equiv_weight(Partition{2}, 2, 4), t(4) - t(2));
  EXPECT_EQ(equiv_weight(Partition{2, 1}, 2, 4), t(4) - t(1));
}

TEST(Partition, EquivWeightIsInjectiveOnTheBox) {
  for (auto [k, n] : {std::pair{2, 4}, {2, 5}, {3, 6}, {3, 7}, {1, 4}}) {
    std::set<std::string> seen;
    for (const auto& p : partitions_in_box(k, n)) EXPECT_TRUE(seen.insert(to_string(equiv_weight(p, k, n))).second);
  }
}

TEST(RimHooks, SpecExamples) {
  auto r = rim_hook_reduce(Partition{3, 1}, 4, 2);
  ASSERT_TRUE(r);
  EXPECT_EQ(r->core, Partition{});
  EXPECT_EQ(r->d, 1);
  EXPECT_EQ(r->heights, std::vector<int>{2});
  EXPECT_EQ(r->sign, 1);

  r = rim_hook_reduce(Partition{4}, 4, 2);
  ASSERT_TRUE(r);
  EXPECT_EQ(r->core, Partition{});
  EXPECT_EQ(r->heights, std::vector<int>{1});
  EXPECT_EQ(r->sign, -1);

  EXPECT_FALSE(rim_hook_reduce(Partition{3}, 4, 2));

  for (const auto& p : partitions_in_box(2, 4)) {
    auto same = rim_hook_reduce(p, 4, 2);
    ASSERT_TRUE(same);
    EXPECT_EQ(same->core, p);
    EXPECT_EQ(same->d, 0);
    EXPECT_EQ(same->sign, 1);
  }
}

// The diagram oracle removes strips in a random order each time, so agreement
// also shows the library's fixed order does not matter.
TEST(RimHooks, AgreeWithRandomOrderDiagramStripping) {
  std::mt19937_64 rng(17);
  for (auto [k, n] : {std::pair{2, 4}, {2, 5}, {3, 6}, {3, 5}}) {
    int bound = k * (2 * n - 1 - k);
    for (int m = 0; m <= bound; ++m)
      for (const auto& gamma : partitions_of(m, k)) {
        auto lib = strip_rim_hooks(gamma, n, k);
        for (int rep = 0; rep < 3; ++rep) {
          auto ref = oracle::strip_randomly(gamma, n, k, rng);
          ASSERT_EQ(lib.core, ref.core) << to_string(gamma);
          ASSERT_EQ(lib.d, ref.d) << to_string(gamma);
          ASSERT_EQ(lib.sign, ref.sign) << to_string(gamma);
        }
        auto red = rim_hook_reduce(gamma, n, k);
        EXPECT_EQ(red.has_value(), in_box(lib.core, k, n));
      }
  }
}

TEST(BarAndFriends, SpecExamples) {
  EXPECT_EQ(bar(Partition{2, 1}, 2, 4), (Partition{3, 1}));
  EXPECT_EQ(bar(Partition{2, 2}, 2, 4), (Partition{3, 2}));
  EXPECT_EQ(bar(Partition{2}, 2, 4), Partition{3});
  EXPECT_EQ(lambda_minus(Partition{2, 2}, 2, 4), Partition{1});
  EXPECT_EQ(lambda_minus(Partition{2, 1}, 2, 4), Partition{});
  EXPECT_FALSE(lambda_minus(Partition{1, 1}, 2, 4));
  EXPECT_EQ(nu_plus(Partition{1}, 2, 4), (Partition{2, 2}));
  EXPECT_EQ(nu_plus(Partition{}, 2, 4), (Partition{2, 1}));
  EXPECT_FALSE(nu_plus(Partition{2, 1}, 2, 4));
}

TEST(BarAndFriends, RoundTripsAndBarReduction) {
  for (auto [k, n] : {std::pair{2, 4}, {2, 5}, {3, 6}, {3, 7}, {2, 6}}) {
    for (const auto& nu : partitions_in_box(k, n))
      if (auto plus = nu_plus(nu, k, n)) EXPECT_EQ(lambda_minus(*plus, k, n), nu);
    for (const auto& lambda : partitions_in_box(k, n)) {
      auto minus = lambda_minus(lambda, k, n);
      if (!minus) continue;
      Partition b = bar(lambda, k, n);
      EXPECT_EQ(b.boxes(), minus->boxes() + n);
      auto r = rim_hook_reduce(b, n, k);
      ASSERT_TRUE(r);
      EXPECT_EQ(r->core, *minus);
      EXPECT_EQ(r->d, 1);
    }
  }
}

}  // namespace
}  // namespace eqrim
