#include <gtest/gtest.h>

#include <limits>
#include <map>
#include <random>

#include <nlohmann/json.hpp>

#include "eqrim/error.hpp"
#include "eqrim/tpoly.hpp"

namespace eqrim {
namespace {

TPoly t(int i) { return TPoly::variable(i); }

TPoly random_tpoly(std::mt19937_64& rng, int low = -2, int high = 7) {
  std::uniform_int_distribution<int> nterms(0, 5);
  std::uniform_int_distribution<int> idx(low, high);
  std::uniform_int_distribution<int> ex(0, 2);
  std::uniform_int_distribution<int> co(-4, 4);
  std::vector<Term> terms;
  for (int i = nterms(rng); i > 0; --i) {
    std::vector<std::pair<int, int>> atoms;
    for (int j = 0; j < 3; ++j) atoms.emplace_back(idx(rng), ex(rng));
    terms.push_back({Monomial::from_pairs(atoms), co(rng)});
  }
  return TPoly::from_terms(std::move(terms));
}

TEST(TPolyArithmetic, SpecExamples) {
  EXPECT_EQ((t(4) - t(3)) + (t(3) - t(2)), t(4) - t(2));
  TPoly p = t(5) * t(1) - 3;
  EXPECT_EQ(p + TPoly{}, p);
  EXPECT_TRUE(((t(4) - t(3)) + (t(3) - t(4))).is_zero());
  EXPECT_EQ((t(4) - t(3)) * (t(4) - t(2)), t(4) * t(4) - t(4) * t(3) - t(4) * t(2) + t(3) * t(2));
  EXPECT_EQ(p * 1, p);
  EXPECT_TRUE((p * 0).is_zero());
}

TEST(TPolyArithmetic, CanonicalPrinting) {
  EXPECT_EQ(to_string((t(4) - t(3)) * (t(4) - t(2))), "t4^2 - t3*t4 - t2*t4 + t2*t3");
  EXPECT_EQ(to_string(t(3) + t(4) - t(1) - t(2)), "t4 + t3 - t2 - t1");
  EXPECT_EQ(to_string(TPoly{}), "0");
  EXPECT_EQ(to_string(t(0) - 1), "t(0) - 1");
}

TEST(TPolyArithmetic, RingAxiomsOnRandomTriples) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    TPoly a = random_tpoly(rng), b = random_tpoly(rng), c = random_tpoly(rng);
    EXPECT_EQ(a + b, b + a);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_TRUE((a - a).is_zero());
    EXPECT_EQ(-(-a), a);
  }
}

TEST(TPolyArithmetic, AccumulatorMatchesPlainArithmetic) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    TPoly a = random_tpoly(rng), b = random_tpoly(rng), c = random_tpoly(rng);
    TPolyAccumulator acc;
    acc.add(a, 3);
    acc.add_product(b, c, -2);
    EXPECT_EQ(acc.take(), a.scaled(3) - (b * c).scaled(2));
  }
}

TEST(TPolyArithmetic, OverflowIsLoud) {
  TPoly big = std::numeric_limits<Coeff>::max();
  EXPECT_THROW(big + 1, ArithmeticOverflow);
  EXPECT_THROW(big * 2, ArithmeticOverflow);
  EXPECT_THROW(-TPoly(std::numeric_limits<Coeff>::min()), ArithmeticOverflow);
}

TEST(ReduceMod, SpecExamples) {
  EXPECT_EQ(reduce_mod(t(5), 4), t(1));
  EXPECT_EQ(reduce_mod(t(5) + t(4) - t(3) - t(2), 4), t(1) + t(4) - t(3) - t(2));
  EXPECT_EQ(reduce_mod(t(8), 4), t(4));
  EXPECT_EQ(reduce_mod(t(0), 4), t(4));
  EXPECT_EQ(reduce_index(-3, 4), 1);
  EXPECT_EQ(reduce_index(-4, 4), 4);
}

TEST(ReduceMod, IsAnIdempotentRingHomomorphism) {
  std::mt19937_64 rng(3);
  for (int n : {2, 3, 4, 5}) {
    for (int trial = 0; trial < 150; ++trial) {
      TPoly a = random_tpoly(rng, -9, 14), b = random_tpoly(rng, -9, 14);
      EXPECT_EQ(reduce_mod(a * b, n), reduce_mod(a, n) * reduce_mod(b, n));
      EXPECT_EQ(reduce_mod(a + b, n), reduce_mod(a, n) + reduce_mod(b, n));
      EXPECT_EQ(reduce_mod(reduce_mod(a, n), n), reduce_mod(a, n));
      if (auto r = reduce_mod(a, n).index_range()) {
        EXPECT_GE(r->first, 1);
        EXPECT_LE(r->second, n);
      }
    }
  }
}

TEST(Substitute, SpecExamples) {
  TPoly p = (t(4) - t(3)) * (t(4) - t(2));
  EXPECT_TRUE(substitute(p, [](int) { return TPoly{}; }).is_zero());
  // t_i -> y_1 + ... + y_{i-1}, with y_j written as t_j.
  auto telescoping = [](int i) {
    TPoly s;
    for (int j = 1; j < i; ++j) s += t(j);
    return s;
  };
  EXPECT_EQ(substitute(t(4) - t(2), telescoping), t(2) + t(3));
  EXPECT_EQ(substitute(TPoly(5), std::map<int, TPoly>{}), TPoly(5));
  EXPECT_THROW(substitute(t(2), std::map<int, TPoly>{{1, t(1)}}), InputError);
}

TEST(Substitute, RootCoordinatesDropTheOffsetForDifferences) {
  TPoly r = to_root_coordinates(t(4) - t(2));
  EXPECT_EQ(r, t(2) + t(3));
  EXPECT_EQ(to_root_coordinates(t(1)), t(0));
  EXPECT_TRUE(has_nonnegative_coefficients(r));
  EXPECT_FALSE(has_nonnegative_coefficients(t(1) - t(2)));
}

TEST(Serialization, TextRoundTripOnRandomPolynomials) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 300; ++trial) {
    TPoly a = random_tpoly(rng);
    EXPECT_EQ(parse_tpoly(to_string(a)), a) << to_string(a);
  }
}

TEST(Serialization, JsonRoundTripOnRandomPolynomials) {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 200; ++trial) {
    TPoly a = random_tpoly(rng);
    nlohmann::json j = a;
    EXPECT_EQ(nlohmann::json::parse(j.dump()).get<TPoly>(), a);
  }
}

TEST(Serialization, ParserAcceptsExpressions) {
  EXPECT_EQ(parse_tpoly("(t4 - t3)*(t4 - t2)"), (t(4) - t(3)) * (t(4) - t(2)));
  EXPECT_EQ(parse_tpoly("2*t1^3 - 4"), t(1) * t(1) * t(1) * 2 - 4);
  EXPECT_EQ(parse_tpoly("t(-2) + t(0)"), t(-2) + t(0));
  EXPECT_THROW(parse_tpoly("t4 +"), ParseError);
  EXPECT_THROW(parse_tpoly("x1"), ParseError);
  EXPECT_THROW(parse_tpoly("(t1"), ParseError);
}

}  // namespace
}  // namespace eqrim
