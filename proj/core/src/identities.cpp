#include "eqrim/identities.hpp"

#include <algorithm>
#include <functional>
#include <mutex>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

#include "eqrim/abacus.hpp"
#include "eqrim/error.hpp"
#include "eqrim/facschur.hpp"
#include "eqrim/parallel.hpp"

namespace eqrim {

namespace {

std::string ps(const Partition& p) { return "(" + (p.empty() ? std::string{} : to_string(p)) + ")"; }

std::string box_name(int k, int n) { return "P_{" + std::to_string(k) + "," + std::to_string(n) + "}"; }

struct CaseResult {
  bool skipped = false;
  std::optional<IdentityFailure> failure;
  std::vector<std::string> tallies;
};

using Case = std::function<CaseResult()>;

CaseResult compare(std::string input, const std::string& lhs, const std::string& rhs, bool equal) {
  CaseResult r;
  if (!equal) r.failure = IdentityFailure{std::move(input), lhs, rhs};
  return r;
}

CaseResult compare(std::string input, const TPoly& lhs, const TPoly& rhs) {
  return compare(std::move(input), to_string(lhs), to_string(rhs), lhs == rhs);
}

CaseResult compare(std::string input, const QClass& lhs, const QClass& rhs) {
  return compare(std::move(input), to_string(lhs), to_string(rhs), lhs == rhs);
}

IdentityReport make_report(std::string name, std::string range) {
  IdentityReport r;
  r.name = std::move(name);
  r.range = std::move(range);
  return r;
}

CaseResult skip() {
  CaseResult r;
  r.skipped = true;
  return r;
}

std::vector<std::size_t> choose(std::size_t count, const VerifyOptions& o) {
  std::vector<std::size_t> all(count);
  std::iota(all.begin(), all.end(), std::size_t{0});
  if (!o.sample || *o.sample >= count) return all;
  std::vector<std::size_t> picked;
  std::mt19937_64 rng(o.seed);
  std::sample(all.begin(), all.end(), std::back_inserter(picked), *o.sample, rng);
  return picked;
}

void run_cases(IdentityReport& report, const std::vector<Case>& cases, const VerifyOptions& o) {
  auto chosen = choose(cases.size(), o);
  auto results =
      parallel_map<CaseResult>(chosen.size(), o.jobs, [&](std::size_t i) { return cases[chosen[i]](); });
  std::map<std::string, std::size_t> tally;
  for (auto& c : results) {
    if (c.skipped) {
      ++report.skipped;
    } else {
      ++report.cases_checked;
    }
    if (c.failure) report.failures.push_back(std::move(*c.failure));
    for (const auto& t : c.tallies) ++tally[t];
  }
  for (const auto& [t, c] : tally) report.notes.push_back(t + ": " + std::to_string(c));
  if (chosen.size() < cases.size()) {
    report.range += ", random sample of " + std::to_string(chosen.size()) + " of " + std::to_string(cases.size()) +
                    " (seed " + std::to_string(o.seed) + ")";
  }
}

std::vector<int> degrees(const VerifyOptions& o) {
  std::vector<int> ds(static_cast<std::size_t>(std::max(o.max_d, 0) + 1));
  std::iota(ds.begin(), ds.end(), 0);
  return ds;
}

std::string triple_input(const Partition& l, const Partition& m, const Partition& nu, int d) {
  return "lambda=" + ps(l) + " mu=" + ps(m) + " nu=" + ps(nu) + " d=" + std::to_string(d);
}

QClass cover_sum(const Partition& p, int k, int n, int d) {
  QClass out(k, n);
  for (const auto& c : covers(p, k, n)) out.add(c, d, 1);
  return out;
}

}  // namespace

// ---------------------------------------------------------------- reports

void to_json(nlohmann::json& j, const IdentityReport& r) {
  auto failures = nlohmann::json::array();
  for (const auto& f : r.failures) failures.push_back({{"input", f.input}, {"lhs", f.lhs}, {"rhs", f.rhs}});
  j = nlohmann::json{{"name", r.name},         {"range", r.range},   {"cases_checked", r.cases_checked},
                     {"skipped", r.skipped},   {"passed", r.passed()}, {"failures", std::move(failures)},
                     {"notes", r.notes}};
}

std::string to_table(const IdentityReport& r) {
  std::ostringstream out;
  out << (r.passed() ? "PASS " : "FAIL ") << r.name << "  [" << r.range << "]  checked=" << r.cases_checked
      << " skipped=" << r.skipped << " failures=" << r.failures.size() << "\n";
  for (const auto& f : r.failures) {
    out << "    " << f.input << "\n      lhs: " << f.lhs << "\n      rhs: " << f.rhs << "\n";
  }
  for (const auto& n : r.notes) out << "    note: " << n << "\n";
  return out.str();
}

// ---------------------------------------------------------------- context

struct VerifyContext::Impl {
  std::mutex mu;
  std::map<std::pair<Partition, Partition>, ClassicalExpansion> lifted;
  std::map<std::pair<Partition, int>, std::vector<std::pair<Partition, int>>> gammas;
};

VerifyContext::VerifyContext(int k, int n, const VerifyOptions& options)
    : k_(k), n_(n), options_(options), products_(k, n, options.cache), impl_(std::make_unique<Impl>()) {
  if (k < 1 || n <= k) throw InputError("verification needs 1 <= k < n");
}

VerifyContext::~VerifyContext() = default;

QClass VerifyContext::quantum(const Partition& a, const Partition& b) { return products_.product(a, b); }

TPoly VerifyContext::quantum_coefficient(const std::optional<Partition>& a, const Partition& b, const Partition& nu,
                                         int d) {
  if (!a || d < 0) return TPoly{};
  return quantum(*a, b).coefficient(nu, d);
}

ClassicalExpansion VerifyContext::lifted(const Partition& a, const Partition& b) {
  auto key = std::pair{a, b};
  {
    std::lock_guard lock(impl_->mu);
    if (auto it = impl_->lifted.find(key); it != impl_->lifted.end()) return it->second;
  }
  // Wide enough that no label of the product is dropped; for a, b in P_kn
  // this is Gr(k, 2n-1) itself.
  const int wide = std::max(2 * n_ - 1, k_ + a[0] + b[0]);
  ClassicalExpansion e = classical_eqlr(a, b, k_, wide, options_.cache, Truncation::kDrop);
  std::lock_guard lock(impl_->mu);
  return impl_->lifted.try_emplace(key, std::move(e)).first->second;
}

QClass VerifyContext::phi_of_label(const Partition& gamma) {
  QClass out(k_, n_);
  if (auto red = rim_hook_reduce(gamma, n_, k_)) out.add(red->core, red->d, red->sign);
  return out;
}

const std::vector<std::pair<Partition, int>>& VerifyContext::gamma_set(const Partition& nu, int d) const {
  std::lock_guard lock(impl_->mu);
  auto [it, inserted] = impl_->gammas.try_emplace({nu, d});
  if (inserted && d >= 0) {
    for (const auto& g : partitions_of(nu.boxes() + d * n_, k_)) {
      auto red = rim_hook_reduce(g, n_, k_);
      if (red && red->d == d && red->core == nu) it->second.emplace_back(g, red->sign);
    }
  }
  return it->second;
}

TPoly phi_coefficient(const ClassicalExpansion& e, int n, const Partition& nu, int d) {
  TPolyAccumulator acc;
  for (const auto& [gamma, c] : e.terms) {
    auto red = rim_hook_reduce(gamma, n, e.k);
    if (red && red->d == d && red->core == nu) acc.add(reduce_mod(c, n), red->sign);
  }
  return acc.take();
}

namespace {

// Phi_{nu,d} of a function on labels of P_{k,2n-1}.
TPoly phi_apply(const VerifyContext& ctx, const Partition& nu, int d, const std::function<TPoly(const Partition&)>& f) {
  TPolyAccumulator acc;
  for (const auto& [gamma, sign] : ctx.gamma_set(nu, d)) acc.add(reduce_mod(f(gamma), ctx.n()), sign);
  return acc.take();
}

// ---------------------------------------------------------------- phisum

CaseResult phisum_case(VerifyContext& ctx, const Partition& gamma) {
  const int k = ctx.k();
  const int n = ctx.n();
  auto red = rim_hook_reduce(gamma, n, k);
  if (!red) return skip();
  QClass lhs(k, n);
  QClass boxed(k, n);
  for (const auto& delta : covers(gamma, k, 2 * n)) {
    lhs += ctx.phi_of_label(delta);
    if (in_box(delta, k, 2 * n - 1)) boxed += ctx.phi_of_label(delta);
  }
  QClass unsigned_rhs = cover_sum(red->core, k, n, red->d);
  if (auto minus = lambda_minus(red->core, k, n)) unsigned_rhs.add(*minus, red->d + 1, 1);
  QClass rhs = unsigned_rhs.scaled(red->sign);
  CaseResult r = compare("gamma=" + ps(gamma) + " nu=" + ps(red->core) + " d=" + std::to_string(red->d), lhs, rhs);
  if (!(lhs == unsigned_rhs)) r.tallies.emplace_back("cases where the unsigned right side differs");
  if (!(boxed == rhs)) r.tallies.emplace_back("cases where covers cut off at P_{k,2n-1} differ");
  return r;
}

// ---------------------------------------------------------------- main id

CaseResult main_id_case(VerifyContext& ctx, const Partition& lambda, const Partition& mu, const Partition& nu, int d) {
  const int k = ctx.k();
  const int n = ctx.n();
  if (lambda[0] != n - k) return skip();
  TPoly lhs = phi_coefficient(ctx.lifted(bar(lambda, k, n), mu), n, nu, d);
  TPoly rhs = ctx.quantum_coefficient(lambda_minus(lambda, k, n), mu, nu, d - 1);
  return compare(triple_input(lambda, mu, nu, d), lhs, rhs);
}

// ---------------------------------------------------------------- recursion

CaseResult recursion_case(VerifyContext& ctx, const Partition& lambda, const Partition& mu, const Partition& nu,
                          int d) {
  const int k = ctx.k();
  const int n = ctx.n();
  TPoly weight_gap = equiv_weight(nu, k, n) - equiv_weight(lambda, k, n);
  if (weight_gap.is_zero()) {
    CaseResult r = skip();
    r.tallies.emplace_back("skipped, denominator vanishes");
    return r;
  }
  TPoly lhs = weight_gap * ctx.quantum_coefficient(lambda, mu, nu, d);
  TPolyAccumulator acc;
  for (const auto& delta : covers(lambda, k, n)) acc.add(ctx.quantum_coefficient(delta, mu, nu, d));
  acc.add(ctx.quantum_coefficient(lambda_minus(lambda, k, n), mu, nu, d - 1));
  for (const auto& zeta : lower_covers(nu)) acc.add(ctx.quantum_coefficient(lambda, mu, zeta, d), -1);
  if (auto plus = nu_plus(nu, k, n); plus && d >= 1) acc.add(ctx.quantum_coefficient(lambda, mu, *plus, d - 1), -1);
  return compare(triple_input(lambda, mu, nu, d), lhs, acc.take());
}

// ---------------------------------------------------------------- corollaries

TPoly sum_lower_covers(const ClassicalExpansion& e, const Partition& gamma) {
  TPolyAccumulator acc;
  for (const auto& eta : lower_covers(gamma)) acc.add(e.coefficient(eta));
  return acc.take();
}

CaseResult cor_cover_case(VerifyContext& ctx, const Partition& lambda, const Partition& mu, const Partition& nu,
                          int d) {
  const int k = ctx.k();
  const int n = ctx.n();
  TPolyAccumulator lhs;
  for (const auto& delta : covers(lambda, k, 2 * n - 1)) lhs.add(phi_coefficient(ctx.lifted(delta, mu), n, nu, d));
  TPolyAccumulator rhs;
  for (const auto& delta : covers(lambda, k, n)) rhs.add(ctx.quantum_coefficient(delta, mu, nu, d));
  rhs.add(ctx.quantum_coefficient(lambda_minus(lambda, k, n), mu, nu, d - 1));
  return compare("cover sum " + triple_input(lambda, mu, nu, d), lhs.take(), rhs.take());
}

CaseResult cor_lower_case(VerifyContext& ctx, const Partition& lambda, const Partition& mu, const Partition& nu,
                          int d) {
  const int k = ctx.k();
  const int n = ctx.n();
  ClassicalExpansion e = ctx.lifted(lambda, mu);
  TPoly lhs = phi_apply(ctx, nu, d, [&](const Partition& g) { return sum_lower_covers(e, g); });
  TPolyAccumulator rhs;
  for (const auto& zeta : lower_covers(nu)) rhs.add(ctx.quantum_coefficient(lambda, mu, zeta, d));
  if (auto plus = nu_plus(nu, k, n); plus && d >= 1) rhs.add(ctx.quantum_coefficient(lambda, mu, *plus, d - 1));
  return compare("lower-cover sum " + triple_input(lambda, mu, nu, d), lhs, rhs.take());
}

CaseResult cor_bar_cover_case(VerifyContext& ctx, const Partition& lambda, const Partition& mu, const Partition& nu,
                              int d) {
  const int k = ctx.k();
  const int n = ctx.n();
  if (lambda[0] != n - k) return skip();
  TPolyAccumulator lhs;
  TPolyAccumulator rhs;
  for (const auto& eps : covers(bar(lambda, k, n), k, 2 * n - 1)) {
    lhs.add(phi_coefficient(ctx.lifted(eps, mu), n, nu, d));
    QClass image = ctx.phi_of_label(eps);
    if (!image.is_zero()) {
      rhs.add(ctx.products().multiply(image, QClass::basis(k, n, mu)).coefficient(nu, d));
    }
  }
  TPoly l = lhs.take();
  CaseResult r = compare("bar cover sum " + triple_input(lambda, mu, nu, d), l, rhs.take());
  TPolyAccumulator literal;
  if (auto minus = lambda_minus(lambda, k, n); minus && d >= 1) {
    for (const auto& delta : covers(*minus, k, n)) literal.add(ctx.quantum_coefficient(delta, mu, nu, d - 1));
  }
  if (!(literal.take() == l)) r.tallies.emplace_back("bar cover sum: cases where the cover-of-lambda^- form differs");
  return r;
}

CaseResult cor_bar_lower_case(VerifyContext& ctx, const Partition& lambda, const Partition& mu, const Partition& nu,
                              int d) {
  const int k = ctx.k();
  const int n = ctx.n();
  if (lambda[0] != n - k) return skip();
  ClassicalExpansion e = ctx.lifted(bar(lambda, k, n), mu);
  TPoly lhs = phi_apply(ctx, nu, d, [&](const Partition& g) { return sum_lower_covers(e, g); });
  auto minus = lambda_minus(lambda, k, n);
  TPolyAccumulator rhs;
  for (const auto& zeta : lower_covers(nu)) rhs.add(ctx.quantum_coefficient(minus, mu, zeta, d - 1));
  if (auto plus = nu_plus(nu, k, n); plus && d >= 2) rhs.add(ctx.quantum_coefficient(minus, mu, *plus, d - 2));
  return compare("bar lower-cover sum " + triple_input(lambda, mu, nu, d), lhs, rhs.take());
}

CaseResult cor_single_hook_case(VerifyContext& ctx, const Partition& eps, const Partition& delta, int sign,
                                const Partition& mu, const Partition& nu, int d) {
  TPoly lhs = phi_coefficient(ctx.lifted(eps, mu), ctx.n(), nu, d);
  TPoly unsigned_rhs = ctx.quantum_coefficient(delta, mu, nu, d - 1);
  CaseResult r = compare("single hook eps=" + ps(eps) + " delta=" + ps(delta) + " mu=" + ps(mu) + " nu=" + ps(nu) +
                             " d=" + std::to_string(d),
                         lhs, unsigned_rhs.scaled(sign));
  if (!(lhs == unsigned_rhs)) r.tallies.emplace_back("single hook: cases where the unsigned form differs");
  return r;
}

QClass pieri_image(VerifyContext& ctx, const QClass& c, bool diagonal) {
  QClass out(ctx.k(), ctx.n());
  for (const auto& [label, v] : c.terms()) {
    QClass step = cover_sum(label.p, ctx.k(), ctx.n(), label.d);
    if (diagonal) step.add(label.p, label.d, equiv_weight(label.p, ctx.k(), ctx.n()));
    if (auto minus = lambda_minus(label.p, ctx.k(), ctx.n())) step.add(*minus, label.d + 1, 1);
    out += step.scaled(v);
  }
  return out;
}

CaseResult final_prop_case(VerifyContext& ctx, const Partition& lambda, const Partition& mu) {
  const int k = ctx.k();
  const int n = ctx.n();
  auto build_rhs = [&](bool diagonal) {
    QClass rhs(k, n);
    for (const auto& eps : covers(lambda, k, n)) rhs += ctx.quantum(eps, mu);
    if (diagonal) rhs += ctx.quantum(lambda, mu).scaled(equiv_weight(lambda, k, n));
    if (auto minus = lambda_minus(lambda, k, n)) rhs += ctx.quantum(*minus, mu).shifted_q(1);
    return rhs;
  };
  QClass product = ctx.quantum(lambda, mu);
  QClass lhs = pieri_image(ctx, product, true);
  CaseResult r = compare("one-box coefficients lambda=" + ps(lambda) + " mu=" + ps(mu), lhs, build_rhs(true));
  if (!(pieri_image(ctx, product, false) == build_rhs(false))) {
    r.tallies.emplace_back("one-box coefficients: cases where the form without diagonal terms differs");
  }
  return r;
}

// ---------------------------------------------------------------- single polynomials

std::string sign_word(int s) { return s > 0 ? "+1" : "-1"; }

// Measured sign s with a = s * b, or 0 if neither sign works.
int measured_sign(const QClass& a, const QClass& b) {
  if (a == b) return 1;
  if (a == b.scaled(-1)) return -1;
  return 0;
}

bool has_illegal_hook(const Partition& p, int n, int k) {
  auto beta = beta_numbers(p, k);
  std::set<int> occupied(beta.begin(), beta.end());
  return std::any_of(beta.begin(), beta.end(), [&](int b) { return b >= n && occupied.count(b - n) > 0; });
}

}  // namespace

// ---------------------------------------------------------------- public checks

IdentityReport verify_phisum(int k, int n, const Partition& gamma) {
  VerifyContext ctx(k, n);
  IdentityReport r = make_report("phisum", "gamma=" + ps(gamma) + " in " + box_name(k, 2 * n - 1));
  run_cases(r, {[&] { return phisum_case(ctx, gamma); }}, ctx.options());
  return r;
}

IdentityReport verify_phisum(int k, int n, const VerifyOptions& options) {
  VerifyContext ctx(k, n, options);
  IdentityReport r = make_report("phisum", "gamma in " + box_name(k, 2 * n - 1) + " with core in " + box_name(k, n));
  std::vector<Case> cases;
  for (const auto& g : partitions_in_box(k, 2 * n - 1)) cases.emplace_back([&ctx, g] { return phisum_case(ctx, g); });
  run_cases(r, cases, options);
  return r;
}

IdentityReport verify_main_id(const Partition& lambda, const Partition& mu, const Partition& nu, int d, int k,
                              int n) {
  VerifyContext ctx(k, n);
  IdentityReport r = make_report("main-id", triple_input(lambda, mu, nu, d));
  run_cases(r, {[&] { return main_id_case(ctx, lambda, mu, nu, d); }}, ctx.options());
  return r;
}

namespace {

template <typename F>
std::vector<Case> over_triples(VerifyContext& ctx, F f) {
  std::vector<Case> cases;
  auto box = partitions_in_box(ctx.k(), ctx.n());
  for (const auto& l : box) {
    for (const auto& m : box) {
      for (const auto& nu : box) {
        for (int d : degrees(ctx.options())) cases.emplace_back([&ctx, f, l, m, nu, d] { return f(ctx, l, m, nu, d); });
      }
    }
  }
  return cases;
}

std::string triple_range(int k, int n, const VerifyOptions& o) {
  return "lambda, mu, nu in " + box_name(k, n) + ", d <= " + std::to_string(o.max_d);
}

}  // namespace

IdentityReport verify_main_id(int k, int n, const VerifyOptions& options) {
  VerifyContext ctx(k, n, options);
  IdentityReport r = make_report("main-id", triple_range(k, n, options));
  run_cases(r, over_triples(ctx, main_id_case), options);
  r.notes.emplace_back("skipped cases have lambda_1 < n-k, where bar lambda is undefined");
  return r;
}

IdentityReport verify_recursion(const Partition& lambda, const Partition& mu, const Partition& nu, int d, int k,
                                int n) {
  VerifyContext ctx(k, n);
  IdentityReport r = make_report("recursion", triple_input(lambda, mu, nu, d));
  run_cases(r, {[&] { return recursion_case(ctx, lambda, mu, nu, d); }}, ctx.options());
  return r;
}

IdentityReport verify_recursion(int k, int n, const VerifyOptions& options) {
  VerifyContext ctx(k, n, options);
  IdentityReport r = make_report("recursion", triple_range(k, n, options));
  run_cases(r, over_triples(ctx, recursion_case), options);
  return r;
}

IdentityReport verify_cor_ids(int k, int n, const VerifyOptions& options) {
  VerifyContext ctx(k, n, options);
  IdentityReport r = make_report("cor-ids", triple_range(k, n, options));
  std::vector<Case> cases;
  for (auto f : {cor_cover_case, cor_lower_case, cor_bar_cover_case, cor_bar_lower_case}) {
    auto more = over_triples(ctx, f);
    cases.insert(cases.end(), more.begin(), more.end());
  }
  auto box = partitions_in_box(k, n);
  for (const auto& eps : partitions_in_box(k, 2 * n - 1)) {
    auto red = rim_hook_reduce(eps, n, k);
    if (!red || red->d != 1 || red->core[0] >= n - k) continue;
    for (const auto& mu : box) {
      for (const auto& nu : box) {
        for (int d : degrees(options)) {
          cases.emplace_back([&ctx, eps, red, mu, nu, d] {
            return cor_single_hook_case(ctx, eps, red->core, red->sign, mu, nu, d);
          });
        }
      }
    }
  }
  for (const auto& l : box) {
    for (const auto& m : box) cases.emplace_back([&ctx, l, m] { return final_prop_case(ctx, l, m); });
  }
  run_cases(r, cases, options);
  r.notes.emplace_back("skipped cases have lambda_1 < n-k, where bar lambda is undefined");
  return r;
}

IdentityReport verify_ideal_lemmas(int k, int n, int s_min, int s_max, const VerifyOptions& options) {
  if (k < 1 || n <= k) throw InputError("verification needs 1 <= k < n");
  IdentityReport r = make_report("lemmas",
                   "k=" + std::to_string(k) + " n=" + std::to_string(n) + ", shifts " + std::to_string(s_min) + ".." +
                       std::to_string(s_max) + ", single shapes with at most " + std::to_string(2 * n) + " boxes");
  const QClass zero(k, n);
  std::vector<Case> cases;
  std::mutex mu;
  std::map<int, std::set<int>> h_n_values;  // shift -> measured constant
  std::map<std::pair<int, int>, int> hook_signs;

  // Ideal generators and their shifts.
  for (int s = s_min; s <= s_max; ++s) {
    for (int m = n - k + 1; m < n; ++m) {
      cases.emplace_back([=] {
        QClass v = normal_form(cyclic_factorial_h(m, k, n, WeightSeq{-s}), k, n);
        return compare("h_" + std::to_string(m) + " shift -" + std::to_string(s), to_string(v), "0", v.is_zero());
      });
    }
    cases.emplace_back([=, &mu, &h_n_values] {
      QClass v = normal_form(cyclic_factorial_h(n, k, n, WeightSeq{-s}), k, n);
      QClass expected = QClass::basis(k, n, Partition{}, 1, k % 2 == 0 ? -1 : 1);
      int c = measured_sign(v, QClass::basis(k, n, Partition{}, 1));
      {
        std::lock_guard lock(mu);
        h_n_values[s].insert(c);
      }
      return compare("h_" + std::to_string(n) + " shift -" + std::to_string(s), v, expected);
    });
  }

  // h_{nd+j} against q^d h_j.
  for (int d = 1; d <= 2; ++d) {
    for (int j = 0; j < n; ++j) {
      cases.emplace_back([=, &mu, &hook_signs] {
        QClass lhs = normal_form(cyclic_factorial_h(n * d + j, k, n), k, n);
        QClass base = normal_form(cyclic_factorial_h(j, k, n), k, n).shifted_q(d);
        std::string input = "h_" + std::to_string(n * d + j) + " against q^" + std::to_string(d) + " h_" +
                            std::to_string(j);
        if (lhs.is_zero() && base.is_zero()) return skip();
        int s = measured_sign(lhs, base);
        if (s == 0) return compare(input, to_string(lhs), "+-" + to_string(base), false);
        std::lock_guard lock(mu);
        hook_signs[{d, j}] = s;
        return CaseResult{};
      });
    }
  }

  // Single shapes.
  for (const auto& lambda : partitions_in_box(k, 2 * n - 1)) {
    if (lambda.boxes() > 2 * n) continue;
    auto strip = strip_rim_hooks(lambda, n, k);
    bool illegal = has_illegal_hook(lambda, n, k);
    cases.emplace_back([=] {
      QClass v = normal_form(cyclic_factorial_schur(lambda, k, n), k, n);
      QClass expected(k, n);
      if (auto red = rim_hook_reduce(lambda, n, k)) expected.add(red->core, red->d, red->sign);
      CaseResult c = compare("s_" + ps(lambda), v, expected);
      if (lambda[0] > n - k && strip.d == 0) {
        if (!v.is_zero()) c = compare("no hook, first row too long: s_" + ps(lambda), to_string(v), "0", false);
        c.tallies.emplace_back("shapes with a long first row and no removable hook");
      }
      if (illegal) {
        if (!v.is_zero()) c = compare("illegal hook: s_" + ps(lambda), to_string(v), "0", false);
        c.tallies.emplace_back("shapes with an illegal hook");
      }
      if (auto red = rim_hook_reduce(lambda, n, k); red && red->d > 0) {
        int literal = 1;
        for (int h : red->heights) literal *= (n - h) % 2 == 0 ? 1 : -1;
        if (literal != red->sign) c.tallies.emplace_back("shapes where the sign (-1)^(n-height) differs");
      }
      return c;
    });
  }
  for (int extra = 1; extra <= n - k; ++extra) {
    // k+1 rows: the tableau sum in k variables is empty.
    Partition tall(std::vector<int>(static_cast<std::size_t>(k + 1), extra));
    cases.emplace_back([=] {
      XPoly v = factorial_schur_ssyt(tall, k);
      return compare("k+1 rows: s_" + ps(tall), to_string(v), "0", v.is_zero());
    });
  }

  // Products s_{bar lambda} s_mu against q s_{lambda^-} s_mu.
  for (const auto& lambda : partitions_in_box(k, n)) {
    if (lambda[0] != n - k) continue;
    Partition lb = bar(lambda, k, n);
    for (const auto& m : partitions_in_box(k, n)) {
      if (lb.boxes() + m.boxes() > 2 * n) continue;
      cases.emplace_back([=] {
        QClass lhs = normal_form(cyclic_factorial_schur(lb, k, n) * cyclic_factorial_schur(m, k, n), k, n);
        QClass rhs(k, n);
        if (auto minus = lambda_minus(lambda, k, n)) {
          rhs = normal_form(cyclic_factorial_schur(*minus, k, n) * cyclic_factorial_schur(m, k, n), k, n).shifted_q(1);
        }
        return compare("s_bar" + ps(lambda) + " s_" + ps(m) + " against q s_" + ps(lambda) + "^- s_" + ps(m), lhs,
                       rhs);
      });
    }
  }

  VerifyOptions o = options;
  o.sample.reset();
  run_cases(r, cases, o);

  std::set<int> constants;
  for (const auto& [s, vals] : h_n_values) constants.insert(vals.begin(), vals.end());
  if (constants.size() == 1 && *constants.begin() != 0) {
    int c = *constants.begin();
    r.notes.push_back("h_n reduces to " + sign_word(c) + " * q for every shift; -(-1)^k = " +
                      sign_word(k % 2 == 0 ? -1 : 1) + ", a bare +1 would " + (c == 1 ? "agree" : "disagree"));
  } else {
    r.notes.emplace_back("h_n is not a constant multiple of q across the shifts");
  }

  // The sign of h_{nd+j} must be (-1)^(d*e) for one parity e.
  std::optional<int> parity;
  bool consistent = true;
  for (const auto& [key, s] : hook_signs) {
    int d = key.first;
    int e = (s == 1) ? 0 : 1;
    if (d % 2 == 0) {
      if (s != 1) consistent = false;
      continue;
    }
    if (parity && *parity != e) consistent = false;
    parity = e;
  }
  if (!consistent) {
    r.failures.push_back({"sign of h_{nd+j} against q^d h_j", "not of the form (-1)^(d*e)", "(-1)^(d*e)"});
  } else if (parity) {
    bool first = *parity == (n - k - 1) % 2;
    bool second = *parity == (k - 1) % 2;
    std::string sign_line = "h_{nd+j} = (-1)^(d*" + std::to_string(*parity) + ") q^d h_j; exponent d(n-k-1) " +
                            (first ? "matches" : "does not match") + ", exponent d(k-1) " +
                            (second ? "matches" : "does not match");
    r.notes.push_back(sign_line);
  }
  return r;
}

IdentityReport verify_eqvt_coeff(const Partition& gamma, int k, int n) {
  IdentityReport r = make_report("eqvt-coeff", "gamma=" + ps(gamma));
  auto red = rim_hook_reduce(gamma, n, k);
  if (!red) {
    r.skipped = 1;
    return r;
  }
  r.cases_checked = 1;
  TPoly lhs = reduce_mod(equiv_weight(gamma, k, 2 * n - 1), n);
  TPoly rhs = equiv_weight(red->core, k, n);
  if (!(lhs == rhs)) r.failures.push_back({"gamma=" + ps(gamma), to_string(lhs), to_string(rhs)});
  return r;
}

IdentityReport verify_eqvt_coeff(int k, int n, const VerifyOptions& options) {
  IdentityReport r = make_report("eqvt-coeff", "gamma in " + box_name(k, 2 * n - 1) + " with core in " + box_name(k, n));
  std::vector<Case> cases;
  for (const auto& g : partitions_in_box(k, 2 * n - 1)) {
    cases.emplace_back([=] {
      IdentityReport one = verify_eqvt_coeff(g, k, n);
      if (one.skipped > 0) return skip();
      CaseResult c;
      if (!one.failures.empty()) c.failure = one.failures.front();
      return c;
    });
  }
  run_cases(r, cases, options);
  return r;
}

IdentityReport verify_pieri(int k, int n, const VerifyOptions& options) {
  VerifyContext ctx(k, n, options);
  IdentityReport r = make_report("pieri", "lambda in " + box_name(k, n));
  std::vector<Case> cases;
  for (const auto& l : partitions_in_box(k, n)) {
    cases.emplace_back(
        [&ctx, l] { return compare("lambda=" + ps(l), ctx.quantum(Partition{1}, l), quantum_pieri(l, ctx.k(), ctx.n())); });
  }
  run_cases(r, cases, options);
  return r;
}

IdentityReport verify_associativity(int k, int n, const VerifyOptions& options) {
  VerifyContext ctx(k, n, options);
  IdentityReport r = make_report("assoc", "triples in " + box_name(k, n));
  auto box = partitions_in_box(k, n);
  std::vector<Case> cases;
  for (const auto& a : box) {
    for (const auto& b : box) {
      for (const auto& c : box) {
        cases.emplace_back([&ctx, a, b, c] {
          auto& p = ctx.products();
          QClass left = p.multiply(p.product(a, b), QClass::basis(ctx.k(), ctx.n(), c));
          QClass right = p.multiply(QClass::basis(ctx.k(), ctx.n(), a), p.product(b, c));
          return compare("a=" + ps(a) + " b=" + ps(b) + " c=" + ps(c), left, right);
        });
      }
    }
  }
  run_cases(r, cases, options);
  return r;
}

IdentityReport verify_one_box_associativity(int k, int n, const VerifyOptions& options) {
  VerifyContext ctx(k, n, options);
  IdentityReport r = make_report("one-box", "pairs in " + box_name(k, n));
  auto box = partitions_in_box(k, n);
  std::vector<Case> cases;
  for (const auto& a : box) {
    for (const auto& b : box) {
      cases.emplace_back([&ctx, a, b] {
        auto& p = ctx.products();
        QClass left = p.multiply(p.product(Partition{1}, a), QClass::basis(ctx.k(), ctx.n(), b));
        QClass right = p.multiply(QClass::basis(ctx.k(), ctx.n(), Partition{1}), p.product(a, b));
        return compare("a=" + ps(a) + " b=" + ps(b), left, right);
      });
    }
  }
  run_cases(r, cases, options);
  return r;
}

IdentityReport verify_commutativity(int k, int n, const VerifyOptions& options) {
  VerifyContext ctx(k, n, options);
  IdentityReport r = make_report("commutativity", "pairs in " + box_name(k, n));
  auto box = partitions_in_box(k, n);
  std::vector<Case> cases;
  for (const auto& a : box) {
    for (const auto& b : box) {
      cases.emplace_back([&ctx, a, b] {
        QClass ab = ctx.quantum(a, b);
        std::string input = "a=" + ps(a) + " b=" + ps(b);
        if (!is_homogeneous(ab, a.boxes() + b.boxes())) {
          return compare(input, to_string(ab), "homogeneous of degree " + std::to_string(a.boxes() + b.boxes()),
                         false);
        }
        return compare(input, ab, ctx.quantum(b, a));
      });
    }
  }
  run_cases(r, cases, options);
  return r;
}

IdentityReport verify_jacobi_trudi(int k, int n, const VerifyOptions& options) {
  IdentityReport r = make_report("jt", "lambda in " + box_name(k, n));
  std::vector<Case> cases;
  for (const auto& l : partitions_in_box(k, n)) {
    cases.emplace_back([=] {
      XPoly a = jacobi_trudi(l, k);
      XPoly b = factorial_schur_ssyt(l, k);
      return compare("lambda=" + ps(l), to_string(a), to_string(b), a == b);
    });
  }
  run_cases(r, cases, options);
  return r;
}

IdentityReport verify_abacus(int k, int n, int max_boxes, const VerifyOptions& options) {
  IdentityReport r = make_report("abacus", "at most " + std::to_string(k) + " rows, at most " + std::to_string(max_boxes) +
                                 " boxes, " + std::to_string(n) + " runners");
  std::vector<Case> cases;
  for (int m = 0; m <= max_boxes; ++m) {
    for (const auto& p : partitions_of(m, k)) {
      cases.emplace_back([=] {
        std::string input = "p=" + ps(p);
        Abacus a = abacus_from_partition(p, k, n);
        if (!(abacus_to_partition(a) == p)) {
          return compare(input + " round trip", ps(abacus_to_partition(a)), ps(p), false);
        }
        auto [flush, moves] = make_flush(a);
        Partition core = abacus_to_partition(flush);
        RimHookReduction strip = strip_rim_hooks(p, n, k);
        std::string lhs = "core " + ps(core) + " d=" + std::to_string(moves);
        std::string rhs = "core " + ps(strip.core) + " d=" + std::to_string(strip.d);
        if (is_flush(a) != (strip.d == 0)) return compare(input + " flush test", lhs, rhs, false);
        return compare(input, lhs, rhs, core == strip.core && moves == strip.d);
      });
    }
  }
  run_cases(r, cases, options);
  return r;
}

std::map<Partition, Coeff> ordinary_lr(const Partition& a, const Partition& b, int k) {
  std::map<Partition, Coeff> out;
  XPoly rest = schur(a, k) * schur(b, k);
  while (!rest.is_zero()) {
    // Largest exponent in the graded lex order is a partition.
    const auto& [e, c] = *rest.terms().begin();
    std::vector<int> parts(e.begin(), e.begin() + k);
    if (!std::is_sorted(parts.rbegin(), parts.rend())) throw InvariantError("leading exponent is not a partition");
    Partition gamma(parts);
    Coeff v = c.constant_term();
    out[gamma] = v;
    rest -= schur(gamma, k).scaled(v);
  }
  return out;
}

IdentityReport verify_specializations(int k, int n, const VerifyOptions& options) {
  VerifyContext ctx(k, n, options);
  IdentityReport r = make_report("specialization", "pairs in " + box_name(k, n));
  auto box = partitions_in_box(k, n);
  std::vector<Case> cases;
  for (const auto& a : box) {
    for (const auto& b : box) {
      cases.emplace_back([&ctx, a, b] {
        const int k = ctx.k();
        const int n = ctx.n();
        QClass product = ctx.quantum(a, b);
        QClass rim(k, n);
        QClass classical(k, n);
        for (const auto& [gamma, c] : ordinary_lr(a, b, k)) {
          if (!in_box(gamma, k, 2 * n - 1)) continue;
          if (in_box(gamma, k, n)) classical.add(gamma, 0, c);
          if (auto red = rim_hook_reduce(gamma, n, k)) rim.add(red->core, red->d, c * red->sign);
        }
        std::string input = "a=" + ps(a) + " b=" + ps(b);
        QClass t0 = specialize_t_zero(product);
        if (!(t0 == rim)) return compare(input + " at t=0", t0, rim);
        return compare(input + " at q=t=0", specialize_q_zero(t0), classical);
      });
    }
  }
  run_cases(r, cases, options);
  return r;
}

IdentityReport verify_positivity(int k, int n, const VerifyOptions& options) {
  VerifyContext ctx(k, n, options);
  IdentityReport r = make_report("positivity", "pairs in " + box_name(k, n));
  auto box = partitions_in_box(k, n);
  std::vector<Case> cases;
  for (const auto& a : box) {
    for (const auto& b : box) {
      cases.emplace_back([&ctx, a, b] {
        QClass product = ctx.quantum(a, b);
        for (const auto& [label, c] : product.terms()) {
          TPoly y = to_root_coordinates(c);
          bool offset = false;
          for (const auto& t : y.terms()) {
            for (const auto& [i, e] : t.monomial.pairs()) offset = offset || i == 0;
          }
          if (offset || !has_nonnegative_coefficients(y)) {
            return compare("a=" + ps(a) + " b=" + ps(b) + " at " + ps(label.p) + " q^" + std::to_string(label.d),
                           to_string(y), "nonnegative in y, no offset", false);
          }
        }
        return CaseResult{};
      });
    }
  }
  run_cases(r, cases, options);
  return r;
}

std::vector<std::string> suite_names() {
  return {"phisum", "main-id", "recursion",  "cor-ids", "lemmas",         "eqvt-coeff", "pieri",
          "assoc",  "one-box", "commutativity", "jt", "abacus", "specialization", "positivity"};
}

std::vector<IdentityReport> run_suite(const std::string& name, int k, int n, const VerifyOptions& options) {
  if (name == "all") {
    std::vector<IdentityReport> out;
    for (const auto& s : suite_names()) {
      auto more = run_suite(s, k, n, options);
      out.insert(out.end(), more.begin(), more.end());
    }
    return out;
  }
  if (name == "phisum") return {verify_phisum(k, n, options)};
  if (name == "main-id") return {verify_main_id(k, n, options)};
  if (name == "recursion") return {verify_recursion(k, n, options)};
  if (name == "cor-ids") return {verify_cor_ids(k, n, options)};
  if (name == "lemmas") return {verify_ideal_lemmas(k, n, 0, n, options)};
  if (name == "eqvt-coeff") return {verify_eqvt_coeff(k, n, options)};
  if (name == "pieri") return {verify_pieri(k, n, options)};
  if (name == "assoc") return {verify_associativity(k, n, options)};
  if (name == "one-box") return {verify_one_box_associativity(k, n, options)};
  if (name == "commutativity") return {verify_commutativity(k, n, options)};
  if (name == "jt") return {verify_jacobi_trudi(k, n, options)};
  if (name == "abacus") return {verify_abacus(k, n, 20, options)};
  if (name == "specialization") return {verify_specializations(k, n, options)};
  if (name == "positivity") return {verify_positivity(k, n, options)};
  throw InputError("unknown suite '" + name + "'");
}

}  // namespace eqrim
