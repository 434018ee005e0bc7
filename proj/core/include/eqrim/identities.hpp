#pragma once

// Checks of coefficient identities over desk-scale ranges. Each check
// collects every counterexample instead of stopping at the first.

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "eqrim/eqlr.hpp"
#include "eqrim/partition.hpp"
#include "eqrim/qclass.hpp"
#include "eqrim/qh.hpp"

namespace eqrim {

struct IdentityFailure {
  std::string input;
  std::string lhs;
  std::string rhs;
};

struct IdentityReport {
  std::string name;
  std::string range;
  std::size_t cases_checked = 0;
  std::size_t skipped = 0;
  std::vector<IdentityFailure> failures;
  std::vector<std::string> notes;

  [[nodiscard]] bool passed() const noexcept { return failures.empty(); }
};

void to_json(nlohmann::json& j, const IdentityReport& r);
/// One summary line plus indented failures and notes.
std::string to_table(const IdentityReport& r);

struct VerifyOptions {
  int jobs = 1;
  ExpansionCache* cache = nullptr;
  int max_d = 2;
  /// Check a seeded random sample of this many cases instead of all.
  std::optional<std::size_t> sample;
  std::uint64_t seed = 1;
};

/// Shared products for one (k, n): quantum products and classical products in
/// Gr(k, 2n-1).
class VerifyContext {
 public:
  VerifyContext(int k, int n, const VerifyOptions& options = {});
  ~VerifyContext();
  VerifyContext(const VerifyContext&) = delete;
  VerifyContext& operator=(const VerifyContext&) = delete;

  [[nodiscard]] int k() const noexcept { return k_; }
  [[nodiscard]] int n() const noexcept { return n_; }
  [[nodiscard]] const VerifyOptions& options() const noexcept { return options_; }

  QClass quantum(const Partition& a, const Partition& b);
  /// c^{nu,d}_{a,b}; zero when a does not exist.
  TPoly quantum_coefficient(const std::optional<Partition>& a, const Partition& b, const Partition& nu, int d);
  /// Classical product with no label dropped: in Gr(k, 2n-1), or wider when
  /// a or b is too wide for it.
  ClassicalExpansion lifted(const Partition& a, const Partition& b);
  /// phi(sigma_gamma) as a class: sign * q^d * sigma_core, or zero.
  QClass phi_of_label(const Partition& gamma);
  QuantumProducts& products() noexcept { return products_; }
  /// All partitions with at most k rows reducing to (nu, d), with signs.
  const std::vector<std::pair<Partition, int>>& gamma_set(const Partition& nu, int d) const;

 private:
  struct Impl;
  int k_;
  int n_;
  VerifyOptions options_;
  QuantumProducts products_;
  std::unique_ptr<Impl> impl_;
};

/// Sum over gamma in Gamma(nu, d) of sign(gamma) * (F(gamma) reduced mod n),
/// i.e. the (nu, d) coefficient of phi applied to sum F(gamma) sigma_gamma.
TPoly phi_coefficient(const ClassicalExpansion& e, int n, const Partition& nu, int d);

// Sum over covers delta of gamma of phi(sigma_delta) against the quantum Pieri
// boundary terms, scaled by the sign of gamma's own reduction. Covers are not
// cut off at the P_{k,2n-1} box; the cut-off version is tallied in the notes.
IdentityReport verify_phisum(int k, int n, const Partition& gamma);
IdentityReport verify_phisum(int k, int n, const VerifyOptions& options = {});

// phi(sum over Gamma of c^gamma_{bar lambda, mu}) = c^{nu,d-1}_{lambda^-, mu}.
IdentityReport verify_main_id(const Partition& lambda, const Partition& mu, const Partition& nu, int d, int k, int n);
IdentityReport verify_main_id(int k, int n, const VerifyOptions& options = {});

// Cross-multiplied form of the recursion coming from one-box associativity.
IdentityReport verify_recursion(const Partition& lambda, const Partition& mu, const Partition& nu, int d, int k,
                                int n);
IdentityReport verify_recursion(int k, int n, const VerifyOptions& options = {});

/// The corollary identities and the final one-box coefficient comparison.
IdentityReport verify_cor_ids(int k, int n, const VerifyOptions& options = {});

/// Ideal relations, shift invariance, the h_{nd+j} sign, and the vanishing
/// and reduction statements for single factorial Schur polynomials.
IdentityReport verify_ideal_lemmas(int k, int n, int s_min, int s_max, const VerifyOptions& options = {});

// Reduction of the diagonal Pieri weight: equiv_weight(gamma) mod n equals
// equiv_weight of the core.
IdentityReport verify_eqvt_coeff(const Partition& gamma, int k, int n);
IdentityReport verify_eqvt_coeff(int k, int n, const VerifyOptions& options = {});

/// quantum_mult(1, lambda) = quantum_pieri(lambda) on all of P_kn.
IdentityReport verify_pieri(int k, int n, const VerifyOptions& options = {});
/// (a*b)*c = a*(b*c); all triples, or a sample.
IdentityReport verify_associativity(int k, int n, const VerifyOptions& options = {});
/// (s_1 * a) * b = s_1 * (a * b).
IdentityReport verify_one_box_associativity(int k, int n, const VerifyOptions& options = {});
/// Commutativity and degree homogeneity of every product.
IdentityReport verify_commutativity(int k, int n, const VerifyOptions& options = {});
/// Jacobi-Trudi against the tableau definition on P_kn.
IdentityReport verify_jacobi_trudi(int k, int n, const VerifyOptions& options = {});
/// Abacus flushing against beta-number stripping and round trips.
IdentityReport verify_abacus(int k, int n, int max_boxes = 20, const VerifyOptions& options = {});
/// t -> 0 gives the signed non-equivariant rim hook rule; q = t = 0 gives
/// ordinary Littlewood-Richardson numbers.
IdentityReport verify_specializations(int k, int n, const VerifyOptions& options = {});
/// Coefficients are nonnegative in y_i = t_{i+1} - t_i.
IdentityReport verify_positivity(int k, int n, const VerifyOptions& options = {});

/// Ordinary Littlewood-Richardson coefficients of s_a * s_b in k variables,
/// computed from ordinary Schur polynomials.
std::map<Partition, Coeff> ordinary_lr(const Partition& a, const Partition& b, int k);

/// Suite names accepted by run_suite.
std::vector<std::string> suite_names();
/// Runs one named suite ("all" runs every suite).
std::vector<IdentityReport> run_suite(const std::string& name, int k, int n, const VerifyOptions& options = {});

}  // namespace eqrim
