#pragma once

// Quantum products in QH_T^*(Gr(k,n)) by lifting to Gr(k,2n-1), multiplying
// classically and reducing with phi.

#include <map>
#include <memory>
#include <optional>
#include <vector>

#include "eqrim/eqlr.hpp"
#include "eqrim/partition.hpp"
#include "eqrim/qclass.hpp"
#include "eqrim/xpoly.hpp"

namespace eqrim {

/// What one label gamma of a Gr(k,2n-1) expansion contributes under phi.
struct PhiContribution {
  Partition gamma;
  TPoly coefficient;
  /// Empty when the n-core of gamma leaves the box (gamma maps to 0).
  std::optional<RimHookReduction> reduction;
  /// sign * (coefficient with indices reduced mod n); zero when dropped.
  TPoly contribution;
};

/// phi on a whole expansion: each sigma_gamma goes to sign * q^d * sigma_core
/// and each coefficient has its indices reduced mod n. Needs e.N = 2n-1.
QClass phi_reduce(const ClassicalExpansion& e, int n, std::vector<PhiContribution>* diagnostics = nullptr);

/// sigma_lhs * sigma_rhs in QH_T^*(Gr(k,n)).
QClass quantum_mult(const Partition& lhs, const Partition& rhs, int k, int n, ExpansionCache* cache = nullptr,
                    std::vector<PhiContribution>* diagnostics = nullptr);
/// The same expansion before reduction, i.e. in H_T^*(Gr(k,2n-1)).
ClassicalExpansion lifted_product(const Partition& lhs, const Partition& rhs, int k, int n,
                                  ExpansionCache* cache = nullptr);

/// sigma_1 * sigma_p from the equivariant quantum Pieri rule.
QClass quantum_pieri(const Partition& p, int k, int n);

/// Image of a symmetric polynomial: indices of its coefficients are reduced
/// mod n, the result is expanded in factorial Schur polynomials (equivalently
/// in their cyclic versions) and every label is reduced as phi does.
QClass normal_form(const XPoly& p, int k, int n);

/// Thread-safe memo of basis products for one (k, n).
class QuantumProducts {
 public:
  QuantumProducts(int k, int n, ExpansionCache* cache = nullptr);
  ~QuantumProducts();
  QuantumProducts(const QuantumProducts&) = delete;
  QuantumProducts& operator=(const QuantumProducts&) = delete;

  [[nodiscard]] int k() const noexcept { return k_; }
  [[nodiscard]] int n() const noexcept { return n_; }

  QClass product(const Partition& lhs, const Partition& rhs);
  /// Bilinear extension of product().
  QClass multiply(const QClass& a, const QClass& b);

 private:
  struct Impl;
  int k_;
  int n_;
  ExpansionCache* cache_;
  std::unique_ptr<Impl> impl_;
};

}  // namespace eqrim
