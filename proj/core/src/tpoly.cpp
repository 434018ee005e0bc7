#include "eqrim/tpoly.hpp"

#include <algorithm>
#include <string>

#include <absl/container/flat_hash_map.h>

#include "eqrim/error.hpp"

namespace eqrim {

Coeff checked_add(Coeff a, Coeff b) {
  Coeff r;
  if (__builtin_add_overflow(a, b, &r)) throw ArithmeticOverflow("coefficient overflow in addition");
  return r;
}

Coeff checked_sub(Coeff a, Coeff b) {
  Coeff r;
  if (__builtin_sub_overflow(a, b, &r)) throw ArithmeticOverflow("coefficient overflow in subtraction");
  return r;
}

Coeff checked_mul(Coeff a, Coeff b) {
  Coeff r;
  if (__builtin_mul_overflow(a, b, &r)) throw ArithmeticOverflow("coefficient overflow in multiplication");
  return r;
}

Coeff checked_neg(Coeff a) { return checked_sub(0, a); }

// ---------------------------------------------------------------- Monomial

std::uint32_t Monomial::pack(int index, int exponent) {
  if (index < kMinIndex || index > kMaxIndex) {
    throw InputError("torus weight index out of range: " + std::to_string(index));
  }
  if (exponent <= 0 || exponent > 0xFFFF) throw ArithmeticOverflow("monomial exponent out of range");
  return (static_cast<std::uint32_t>(index - kMinIndex) << 16) | static_cast<std::uint32_t>(exponent);
}

Monomial Monomial::variable(int index, int exponent) {
  Monomial m;
  if (exponent == 0) return m;
  m.atoms_.push_back(pack(index, exponent));
  m.degree_ = static_cast<std::uint32_t>(exponent);
  return m;
}

Monomial Monomial::from_pairs(std::span<const std::pair<int, int>> pairs) {
  std::vector<std::pair<int, int>> sorted(pairs.begin(), pairs.end());
  std::sort(sorted.begin(), sorted.end());
  Monomial m;
  for (std::size_t i = 0; i < sorted.size();) {
    int index = sorted[i].first;
    long exp = 0;
    for (; i < sorted.size() && sorted[i].first == index; ++i) {
      if (sorted[i].second < 0) throw InputError("negative exponent in monomial");
      exp += sorted[i].second;
    }
    if (exp == 0) continue;
    if (exp > 0xFFFF) throw ArithmeticOverflow("monomial exponent out of range");
    m.atoms_.push_back(pack(index, static_cast<int>(exp)));
    m.degree_ += static_cast<std::uint32_t>(exp);
  }
  return m;
}

int Monomial::exponent_of(int index) const noexcept {
  for (std::size_t i = 0; i < atoms_.size(); ++i) {
    if (index_at(i) == index) return exponent_at(i);
  }
  return 0;
}

std::vector<std::pair<int, int>> Monomial::pairs() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(atoms_.size());
  for (std::size_t i = 0; i < atoms_.size(); ++i) out.emplace_back(index_at(i), exponent_at(i));
  return out;
}

std::size_t Monomial::hash() const noexcept {
  std::uint64_t h = 1469598103934665603ull;
  for (auto a : atoms_) {
    h ^= a;
    h *= 1099511628211ull;
  }
  return static_cast<std::size_t>(h);
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial out;
  if (a.is_one()) return b;
  if (b.is_one()) return a;
  out.atoms_.reserve(a.atoms_.size() + b.atoms_.size());
  std::size_t i = 0, j = 0;
  while (i < a.atoms_.size() && j < b.atoms_.size()) {
    std::uint32_t ka = a.atoms_[i] >> 16;
    std::uint32_t kb = b.atoms_[j] >> 16;
    if (ka < kb) {
      out.atoms_.push_back(a.atoms_[i++]);
    } else if (kb < ka) {
      out.atoms_.push_back(b.atoms_[j++]);
    } else {
      std::uint32_t e = (a.atoms_[i] & 0xFFFFu) + (b.atoms_[j] & 0xFFFFu);
      if (e > 0xFFFFu) throw ArithmeticOverflow("monomial exponent out of range");
      out.atoms_.push_back((ka << 16) | e);
      ++i;
      ++j;
    }
  }
  for (; i < a.atoms_.size(); ++i) out.atoms_.push_back(a.atoms_[i]);
  for (; j < b.atoms_.size(); ++j) out.atoms_.push_back(b.atoms_[j]);
  out.degree_ = a.degree_ + b.degree_;
  return out;
}

bool canonical_before(const Monomial& a, const Monomial& b) noexcept {
  if (a.degree_ != b.degree_) return a.degree_ > b.degree_;
  return std::lexicographical_compare(b.atoms_.begin(), b.atoms_.end(), a.atoms_.begin(),
                                      a.atoms_.end());
}

// ------------------------------------------------------------------- TPoly

namespace {

struct CanonicalOrder {
  bool operator()(const Term& a, const Term& b) const noexcept {
    return canonical_before(a.monomial, b.monomial);
  }
};

using TermMap = absl::flat_hash_map<Monomial, Coeff>;

std::vector<Term> drain_sorted(TermMap& map) {
  std::vector<Term> out;
  out.reserve(map.size());
  for (auto& [m, c] : map) {
    if (c != 0) out.push_back(Term{m, c});
  }
  map.clear();
  std::sort(out.begin(), out.end(), CanonicalOrder{});
  return out;
}

// Merges two canonical term lists; sign applies to b.
std::vector<Term> merge_terms(const std::vector<Term>& a, const std::vector<Term>& b, bool negate_b) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && canonical_before(a[i].monomial, b[j].monomial))) {
      out.push_back(a[i++]);
    } else if (i == a.size() || canonical_before(b[j].monomial, a[i].monomial)) {
      Term t = b[j++];
      if (negate_b) t.coeff = checked_neg(t.coeff);
      out.push_back(std::move(t));
    } else {
      Coeff c = negate_b ? checked_sub(a[i].coeff, b[j].coeff) : checked_add(a[i].coeff, b[j].coeff);
      if (c != 0) out.push_back(Term{a[i].monomial, c});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

TPoly::TPoly(Coeff c) {
  if (c != 0) terms_.push_back(Term{Monomial{}, c});
}

TPoly TPoly::variable(int index) { return monomial(Monomial::variable(index), 1); }

TPoly TPoly::monomial(Monomial m, Coeff c) {
  TPoly p;
  if (c != 0) p.terms_.push_back(Term{std::move(m), c});
  return p;
}

TPoly TPoly::from_terms(std::vector<Term> terms) {
  TermMap map;
  map.reserve(terms.size());
  for (auto& t : terms) {
    auto [it, inserted] = map.try_emplace(std::move(t.monomial), t.coeff);
    if (!inserted) it->second = checked_add(it->second, t.coeff);
  }
  TPoly p;
  p.terms_ = drain_sorted(map);
  return p;
}

bool TPoly::is_constant() const noexcept {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].monomial.is_one());
}

Coeff TPoly::constant_term() const noexcept {
  if (!terms_.empty() && terms_.back().monomial.is_one()) return terms_.back().coeff;
  return 0;
}

Coeff TPoly::coefficient(const Monomial& m) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m, [](const Term& t, const Monomial& key) {
    return canonical_before(t.monomial, key);
  });
  if (it != terms_.end() && it->monomial == m) return it->coeff;
  return 0;
}

int TPoly::degree() const noexcept { return terms_.empty() ? -1 : terms_.front().monomial.degree(); }

std::optional<std::pair<int, int>> TPoly::index_range() const {
  std::optional<std::pair<int, int>> out;
  for (const auto& t : terms_) {
    for (std::size_t i = 0; i < t.monomial.num_variables(); ++i) {
      int idx = t.monomial.index_at(i);
      if (!out) {
        out = std::pair{idx, idx};
      } else {
        out->first = std::min(out->first, idx);
        out->second = std::max(out->second, idx);
      }
    }
  }
  return out;
}

TPoly& TPoly::operator+=(const TPoly& other) {
  if (other.terms_.empty()) return *this;
  terms_ = merge_terms(terms_, other.terms_, false);
  return *this;
}

TPoly& TPoly::operator-=(const TPoly& other) {
  if (other.terms_.empty()) return *this;
  terms_ = merge_terms(terms_, other.terms_, true);
  return *this;
}

TPoly& TPoly::operator*=(const TPoly& other) {
  *this = *this * other;
  return *this;
}

TPoly operator*(const TPoly& a, const TPoly& b) {
  if (a.is_zero() || b.is_zero()) return TPoly{};
  if (a.is_constant()) return b.scaled(a.constant_term());
  if (b.is_constant()) return a.scaled(b.constant_term());
  TPolyAccumulator acc;
  acc.add_product(a, b);
  return acc.take();
}

TPoly operator-(const TPoly& a) { return a.scaled(-1); }

TPoly TPoly::scaled(Coeff c) const {
  TPoly out;
  if (c == 0) return out;
  out.terms_.reserve(terms_.size());
  for (const auto& t : terms_) out.terms_.push_back(Term{t.monomial, checked_mul(t.coeff, c)});
  return out;
}

// ------------------------------------------------------------- Accumulator

struct TPolyAccumulator::Impl {
  TermMap map;
};

TPolyAccumulator::TPolyAccumulator() : impl_(std::make_unique<Impl>()) {}
TPolyAccumulator::~TPolyAccumulator() = default;
TPolyAccumulator::TPolyAccumulator(TPolyAccumulator&&) noexcept = default;
TPolyAccumulator& TPolyAccumulator::operator=(TPolyAccumulator&&) noexcept = default;

void TPolyAccumulator::add_term(const Monomial& m, Coeff c) {
  if (c == 0) return;
  auto [it, inserted] = impl_->map.try_emplace(m, c);
  if (!inserted) it->second = checked_add(it->second, c);
}

void TPolyAccumulator::add(const TPoly& p, Coeff scale) {
  if (scale == 0) return;
  for (const auto& t : p.terms()) add_term(t.monomial, checked_mul(t.coeff, scale));
}

void TPolyAccumulator::add_product(const TPoly& a, const TPoly& b, Coeff scale) {
  if (scale == 0) return;
  const auto& at = a.terms();
  const auto& bt = b.terms();
  if (at.empty() || bt.empty()) return;
  impl_->map.reserve(impl_->map.size() + std::min<std::size_t>(at.size() * bt.size(), 1u << 16));
  for (const auto& x : at) {
    Coeff cx = checked_mul(x.coeff, scale);
    for (const auto& y : bt) add_term(x.monomial * y.monomial, checked_mul(cx, y.coeff));
  }
}

bool TPolyAccumulator::empty() const noexcept { return impl_->map.empty(); }

TPoly TPolyAccumulator::take() {
  TPoly p;
  p.terms_ = drain_sorted(impl_->map);
  return p;
}

// ------------------------------------------------------- index operations

int reduce_index(int index, int n) {
  if (n < 1) throw InputError("reduction modulus must be positive");
  int r = index % n;
  if (r <= 0) r += n;
  return r;
}

namespace {

TPoly map_monomials(const TPoly& p, const std::function<Monomial(const Monomial&)>& f) {
  std::vector<Term> terms;
  terms.reserve(p.size());
  for (const auto& t : p.terms()) terms.push_back(Term{f(t.monomial), t.coeff});
  return TPoly::from_terms(std::move(terms));
}

}  // namespace

TPoly reduce_mod(const TPoly& p, int n) {
  if (n < 1) throw InputError("reduction modulus must be positive");
  return map_monomials(p, [n](const Monomial& m) {
    auto pairs = m.pairs();
    for (auto& [idx, exp] : pairs) idx = reduce_index(idx, n);
    return Monomial::from_pairs(pairs);
  });
}

TPoly shift_indices(const TPoly& p, int s) {
  if (s == 0) return p;
  return map_monomials(p, [s](const Monomial& m) {
    auto pairs = m.pairs();
    for (auto& [idx, exp] : pairs) idx += s;
    return Monomial::from_pairs(pairs);
  });
}

TPoly substitute(const TPoly& p, const std::function<TPoly(int)>& assignment) {
  std::map<std::pair<int, int>, TPoly> powers;
  auto power = [&](int idx, int exp) -> const TPoly& {
    auto key = std::pair{idx, exp};
    auto it = powers.find(key);
    if (it != powers.end()) return it->second;
    TPoly base = assignment(idx);
    TPoly r = 1;
    for (int e = 0; e < exp; ++e) r *= base;
    return powers.emplace(key, std::move(r)).first->second;
  };
  TPolyAccumulator acc;
  for (const auto& t : p.terms()) {
    TPoly prod = t.coeff;
    for (std::size_t i = 0; i < t.monomial.num_variables(); ++i) {
      prod *= power(t.monomial.index_at(i), t.monomial.exponent_at(i));
    }
    acc.add(prod);
  }
  return acc.take();
}

TPoly substitute(const TPoly& p, const std::map<int, TPoly>& assignment) {
  return substitute(p, [&assignment](int idx) -> TPoly {
    auto it = assignment.find(idx);
    if (it == assignment.end()) {
      throw InputError("substitution does not assign t" + std::to_string(idx));
    }
    return it->second;
  });
}

TPoly to_root_coordinates(const TPoly& p) {
  return substitute(p, [](int idx) {
    TPoly r = TPoly::variable(0);
    for (int j = 1; j < idx; ++j) r += TPoly::variable(j);
    for (int j = idx; j < 1; ++j) r -= TPoly::variable(j);
    return r;
  });
}

bool has_nonnegative_coefficients(const TPoly& p) {
  return std::all_of(p.terms().begin(), p.terms().end(), [](const Term& t) { return t.coeff >= 0; });
}

}  // namespace eqrim
