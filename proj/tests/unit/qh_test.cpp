#include <gtest/gtest.h>

#include <random>

#include <nlohmann/json.hpp>

#include "eqrim/error.hpp"
#include "eqrim/facschur.hpp"
#include "eqrim/qh.hpp"
#include "oracles.hpp"

namespace eqrim {
namespace {

TPoly t(int i) { return TPoly::variable(i); }

QClass cls(int k, int n, std::initializer_list<std::tuple<Partition, int, TPoly>> terms) {
  QClass c(k, n);
  for (const auto& [p, d, coeff] : terms) c.add(p, d, coeff);
  return c;
}

// Non-equivariant rim hook rule from ordinary LR numbers in Gr(k, 2n-1) and
// random-order strip removal.
QClass nonequivariant_product(const Partition& a, const Partition& b, int k, int n, std::mt19937_64& rng) {
  QClass out(k, n);
  for (const auto& g : oracle::box(k, 2 * n - 1)) {
    if (g.boxes() != a.boxes() + b.boxes()) continue;
    oracle::Int c = oracle::lr_tableaux(a, b, g);
    if (c == 0) continue;
    auto s = oracle::strip_randomly(g, n, k, rng);
    if (!in_box(s.core, k, n)) continue;
    out.add(s.core, s.d, TPoly(c * s.sign));
  }
  return out;
}

TEST(QuantumProduct, TwoByTwoGolden) {
  EXPECT_EQ(quantum_mult(Partition{2}, Partition{2}, 2, 4),
            cls(2, 4, {{Partition{2}, 0, (t(4) - t(3)) * (t(4) - t(2))},
                       {Partition{2, 1}, 0, t(4) - t(3)},
                       {Partition{2, 2}, 0, 1}}));
  EXPECT_EQ(quantum_mult(Partition{}, Partition{2, 1}, 2, 4), QClass::basis(2, 4, Partition{2, 1}));
  EXPECT_EQ(quantum_mult(Partition{1}, Partition{2, 2}, 2, 4),
            cls(2, 4, {{Partition{2, 2}, 0, t(3) + t(4) - t(1) - t(2)}, {Partition{1}, 1, 1}}));
}

TEST(QuantumProduct, DiagnosticsShowTheCancellingPair) {
  std::vector<PhiContribution> diag;
  quantum_mult(Partition{2}, Partition{2}, 2, 4, nullptr, &diag);
  ASSERT_EQ(diag.size(), 6u);
  int seen = 0;
  for (const auto& c : diag) {
    if (c.gamma == Partition{3, 1}) {
      ASSERT_TRUE(c.reduction);
      EXPECT_EQ(c.reduction->sign, 1);
      EXPECT_EQ(c.contribution, TPoly(1));
      ++seen;
    } else if (c.gamma == Partition{4}) {
      ASSERT_TRUE(c.reduction);
      EXPECT_EQ(c.reduction->sign, -1);
      EXPECT_EQ(c.contribution, TPoly(-1));
      ++seen;
    } else if (c.gamma == Partition{3}) {
      EXPECT_FALSE(c.reduction);
      EXPECT_TRUE(c.contribution.is_zero());
    }
  }
  EXPECT_EQ(seen, 2);
}

TEST(PhiReduce, Examples) {
  ClassicalExpansion only3{2, 7, {{Partition{3}, t(5)}}};
  EXPECT_TRUE(phi_reduce(only3, 4).is_zero());
  ClassicalExpansion inside{2, 7, {{Partition{2, 1}, t(1) - t(3)}, {Partition{1}, 2}}};
  EXPECT_EQ(phi_reduce(inside, 4), cls(2, 4, {{Partition{2, 1}, 0, t(1) - t(3)}, {Partition{1}, 0, 2}}));
  ClassicalExpansion wrapped{2, 7, {{Partition{2, 1}, t(6)}, {Partition{3, 1}, t(5)}}};
  EXPECT_EQ(phi_reduce(wrapped, 4), cls(2, 4, {{Partition{2, 1}, 0, t(2)}, {Partition{}, 1, t(1)}}));
}

TEST(QuantumPieri, Examples) {
  EXPECT_EQ(quantum_pieri(Partition{}, 2, 4), QClass::basis(2, 4, Partition{1}));
  EXPECT_EQ(quantum_pieri(Partition{2, 2}, 2, 4),
            cls(2, 4, {{Partition{2, 2}, 0, t(3) + t(4) - t(1) - t(2)}, {Partition{1}, 1, 1}}));
  EXPECT_EQ(quantum_pieri(Partition{2, 1}, 2, 4),
            cls(2, 4, {{Partition{2, 2}, 0, 1}, {Partition{2, 1}, 0, t(4) - t(1)}, {Partition{}, 1, 1}}));
}

TEST(QuantumProduct, PieriAgreement) {
  for (auto [k, n] : {std::pair{2, 4}, {2, 5}, {3, 6}})
    for (const auto& p : partitions_in_box(k, n))
      EXPECT_EQ(quantum_mult(Partition{1}, p, k, n), quantum_pieri(p, k, n)) << to_string(p);
}

TEST(QuantumProduct, CommutativeAndHomogeneous) {
  for (auto [k, n] : {std::pair{2, 4}, {2, 5}}) {
    QuantumProducts qp(k, n);
    for (const auto& a : partitions_in_box(k, n))
      for (const auto& b : partitions_in_box(k, n)) {
        QClass ab = qp.product(a, b);
        EXPECT_EQ(ab, qp.product(b, a));
        EXPECT_TRUE(is_homogeneous(ab, a.boxes() + b.boxes()));
        EXPECT_EQ(ab, quantum_mult(a, b, k, n));
      }
  }
}

TEST(QuantumProduct, TZeroIsTheNonEquivariantRimHookRule) {
  std::mt19937_64 rng(13);
  for (auto [k, n] : {std::pair{2, 4}, {2, 5}, {3, 5}})
    for (const auto& a : partitions_in_box(k, n))
      for (const auto& b : partitions_in_box(k, n)) {
        QClass ab = quantum_mult(a, b, k, n);
        EXPECT_EQ(specialize_t_zero(ab), nonequivariant_product(a, b, k, n, rng))
            << to_string(a) << " * " << to_string(b);
        QClass classical(k, n);
        for (const auto& nu : partitions_in_box(k, n))
          if (nu.boxes() == a.boxes() + b.boxes())
            if (auto c = oracle::lr_tableaux(a, b, nu)) classical.add(nu, 0, TPoly(c));
        EXPECT_EQ(specialize_q_zero(specialize_t_zero(ab)), classical);
      }
}

TEST(QuantumProduct, PositiveInRootCoordinates) {
  for (const auto& a : partitions_in_box(2, 4))
    for (const auto& b : partitions_in_box(2, 4)) {
      QClass ab = quantum_mult(a, b, 2, 4);
      for (const auto& [label, c] : ab.terms()) {
        TPoly y = to_root_coordinates(c);
        EXPECT_TRUE(has_nonnegative_coefficients(y)) << to_string(c);
        if (auto r = y.index_range()) EXPECT_GE(r->first, 1);
      }
    }
}

TEST(NormalForm, IdealRelations) {
  EXPECT_TRUE(normal_form(factorial_h(3, 2), 2, 4).is_zero());
  EXPECT_EQ(normal_form(factorial_h(4, 2), 2, 4), QClass::basis(2, 4, Partition{}, 1, -1));
  EXPECT_TRUE(normal_form(factorial_h(3, 2, WeightSeq{-2}), 2, 4).is_zero());
  for (int s = 0; s <= 4; ++s)
    EXPECT_EQ(normal_form(factorial_h(4, 2, WeightSeq{-s}), 2, 4), QClass::basis(2, 4, Partition{}, 1, -1));
  for (const auto& p : partitions_in_box(2, 4))
    EXPECT_EQ(normal_form(factorial_schur_ssyt(p, 2), 2, 4), QClass::basis(2, 4, p));
}

TEST(NormalForm, AgreesWithProducts) {
  for (auto [k, n] : {std::pair{2, 4}, {2, 5}}) {
    auto box = partitions_in_box(k, n);
    for (const auto& a : box)
      for (const auto& b : box)
        EXPECT_EQ(normal_form(factorial_schur_ssyt(a, k) * factorial_schur_ssyt(b, k), k, n), quantum_mult(a, b, k, n));
  }
}

TEST(NormalForm, BarRelation) {
  const int k = 2, n = 4;
  for (const auto& lambda : partitions_in_box(k, n)) {
    auto minus = lambda_minus(lambda, k, n);
    if (!minus) continue;
    for (const auto& mu : partitions_in_box(k, n)) {
      XPoly lhs = factorial_schur_ssyt(bar(lambda, k, n), k) * factorial_schur_ssyt(mu, k);
      XPoly rhs = factorial_schur_ssyt(*minus, k) * factorial_schur_ssyt(mu, k);
      EXPECT_EQ(normal_form(lhs, k, n), normal_form(rhs, k, n).shifted_q(1));
    }
  }
}

TEST(QClassBehaviour, ArithmeticAndErrors) {
  QClass a = QClass::basis(2, 4, Partition{1}, 0, t(1));
  QClass b = QClass::basis(2, 4, Partition{1}, 0, -t(1));
  EXPECT_TRUE((a + b).is_zero());
  EXPECT_THROW(QClass(2, 4).add(Partition{3}, 0, 1), DomainError);
  EXPECT_THROW(a + QClass(2, 5), InputError);
  EXPECT_EQ(to_string(cls(2, 4, {{Partition{2, 1}, 0, t(4) - t(3)}, {Partition{}, 1, 1}})), "(t4 - t3)*s[2,1] + q*s[]");
}

TEST(QClassBehaviour, JsonRoundTrip) {
  for (const auto& a : partitions_in_box(2, 5))
    for (const auto& b : partitions_in_box(2, 5)) {
      QClass ab = quantum_mult(a, b, 2, 5);
      nlohmann::json j = ab;
      EXPECT_EQ(qclass_from_json(nlohmann::json::parse(j.dump())), ab);
    }
}

}  // namespace
}  // namespace eqrim
