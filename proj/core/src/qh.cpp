#include "eqrim/qh.hpp"

#include <mutex>

#include "eqrim/error.hpp"
#include "eqrim/facschur.hpp"

namespace eqrim {

QClass phi_reduce(const ClassicalExpansion& e, int n, std::vector<PhiContribution>* diagnostics) {
  if (e.N != 2 * n - 1) throw InputError("phi needs an expansion in Gr(k,2n-1)");
  QClass out(e.k, n);
  // Walk labels largest first so diagnostics read like the product display.
  for (auto it = e.terms.rbegin(); it != e.terms.rend(); ++it) {
    const auto& [gamma, c] = *it;
    auto red = rim_hook_reduce(gamma, n, e.k);
    TPoly contribution;
    if (red) {
      contribution = reduce_mod(c, n).scaled(red->sign);
      out.add(red->core, red->d, contribution);
    }
    if (diagnostics != nullptr) diagnostics->push_back(PhiContribution{gamma, c, red, contribution});
  }
  return out;
}

ClassicalExpansion lifted_product(const Partition& lhs, const Partition& rhs, int k, int n, ExpansionCache* cache) {
  require_in_box(lhs, k, n);
  require_in_box(rhs, k, n);
  // s_p(x|t) for p in P_kn only involves t_1..t_{k+p_1-1}, so the lift is the
  // identity on coefficients.
  for (const auto* p : {&lhs, &rhs}) {
    if (!p->empty() && k + (*p)[0] - 1 > n) {
      throw InvariantError("lifted class of " + to_string(*p) + " mentions weights beyond t_n");
    }
  }
  return classical_eqlr(lhs, rhs, k, 2 * n - 1, cache, Truncation::kForbid);
}

QClass quantum_mult(const Partition& lhs, const Partition& rhs, int k, int n, ExpansionCache* cache,
                    std::vector<PhiContribution>* diagnostics) {
  return phi_reduce(lifted_product(lhs, rhs, k, n, cache), n, diagnostics);
}

QClass quantum_pieri(const Partition& p, int k, int n) {
  require_in_box(p, k, n);
  QClass out(k, n);
  for (const auto& c : covers(p, k, n)) out.add(c, 0, 1);
  out.add(p, 0, equiv_weight(p, k, n));
  if (auto minus = lambda_minus(p, k, n)) out.add(*minus, 1, 1);
  return out;
}

QClass normal_form(const XPoly& p, int k, int n) {
  if (p.num_vars() != k) throw InputError("polynomial has the wrong number of x variables");
  XPoly reduced = map_coefficients(p, [n](const TPoly& c) { return reduce_mod(c, n); });
  QClass out(k, n);
  for (const auto& [gamma, c] : expand_in_cyclic_factorial_schur(reduced, k, n)) {
    if (auto red = rim_hook_reduce(gamma, n, k)) out.add(red->core, red->d, c.scaled(red->sign));
  }
  return out;
}

struct QuantumProducts::Impl {
  std::mutex mu;
  std::map<std::pair<Partition, Partition>, QClass> table;
};

QuantumProducts::QuantumProducts(int k, int n, ExpansionCache* cache)
    : k_(k), n_(n), cache_(cache), impl_(std::make_unique<Impl>()) {}

QuantumProducts::~QuantumProducts() = default;

QClass QuantumProducts::product(const Partition& lhs, const Partition& rhs) {
  auto key = std::pair{lhs, rhs};
  {
    std::lock_guard lock(impl_->mu);
    if (auto it = impl_->table.find(key); it != impl_->table.end()) return it->second;
  }
  QClass c = quantum_mult(lhs, rhs, k_, n_, cache_);
  std::lock_guard lock(impl_->mu);
  return impl_->table.try_emplace(key, std::move(c)).first->second;
}

QClass QuantumProducts::multiply(const QClass& a, const QClass& b) {
  if (a.k() != k_ || a.n() != n_ || b.k() != k_ || b.n() != n_) {
    throw InputError("classes live in a different quantum ring");
  }
  QClass out(k_, n_);
  for (const auto& [la, ca] : a.terms()) {
    for (const auto& [lb, cb] : b.terms()) {
      out += product(la.p, lb.p).shifted_q(la.d + lb.d).scaled(ca * cb);
    }
  }
  return out;
}

}  // namespace eqrim
