#pragma once

// Exact polynomials in the torus weights t_i, i ranging over all integers.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/container/small_vector.hpp>
#include <nlohmann/json_fwd.hpp>

namespace eqrim {

using Coeff = std::int64_t;

// Overflow-checked coefficient arithmetic; throws ArithmeticOverflow.
Coeff checked_add(Coeff a, Coeff b);
Coeff checked_sub(Coeff a, Coeff b);
Coeff checked_mul(Coeff a, Coeff b);
Coeff checked_neg(Coeff a);

/// A power product of torus weights, stored as (index, exponent) atoms sorted
/// by index. Exponents are positive; the empty product is the monomial 1.
class Monomial {
 public:
  static constexpr int kMinIndex = -32768;
  static constexpr int kMaxIndex = 32767;

  Monomial() = default;

  static Monomial variable(int index, int exponent = 1);
  /// Builds from (index, exponent) pairs in any order; merges repeated
  /// indices and drops zero exponents.
  static Monomial from_pairs(std::span<const std::pair<int, int>> pairs);

  [[nodiscard]] int degree() const noexcept { return static_cast<int>(degree_); }
  [[nodiscard]] bool is_one() const noexcept { return atoms_.empty(); }
  [[nodiscard]] std::size_t num_variables() const noexcept { return atoms_.size(); }
  [[nodiscard]] int index_at(std::size_t i) const noexcept {
    return static_cast<int>(atoms_[i] >> 16) + kMinIndex;
  }
  [[nodiscard]] int exponent_at(std::size_t i) const noexcept {
    return static_cast<int>(atoms_[i] & 0xFFFFu);
  }
  [[nodiscard]] int exponent_of(int index) const noexcept;
  [[nodiscard]] std::vector<std::pair<int, int>> pairs() const;

  [[nodiscard]] std::size_t hash() const noexcept;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial& a, const Monomial& b) noexcept {
    return a.degree_ == b.degree_ && a.atoms_ == b.atoms_;
  }

  /// Canonical term order: higher total degree first, then lexicographically
  /// larger (index, exponent) sequence first.
  friend bool canonical_before(const Monomial& a, const Monomial& b) noexcept;

  template <typename H>
  friend H AbslHashValue(H h, const Monomial& m) {
    return H::combine_contiguous(std::move(h), m.atoms_.data(), m.atoms_.size());
  }

 private:
  static std::uint32_t pack(int index, int exponent);

  boost::container::small_vector<std::uint32_t, 6> atoms_;
  std::uint32_t degree_ = 0;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept { return m.hash(); }
};

struct Term {
  Monomial monomial;
  Coeff coeff = 0;

  friend bool operator==(const Term&, const Term&) = default;
};

/// Element of Z[t_i : i in Z] in canonical form: terms sorted by
/// canonical_before, distinct monomials, nonzero coefficients. Equality is
/// term-sequence equality.
class TPoly {
 public:
  TPoly() = default;
  TPoly(Coeff c);  // NOLINT(google-explicit-constructor): integers embed as constants

  static TPoly variable(int index);
  static TPoly monomial(Monomial m, Coeff c = 1);
  /// Canonicalizes an arbitrary term list.
  static TPoly from_terms(std::vector<Term> terms);

  [[nodiscard]] const std::vector<Term>& terms() const noexcept { return terms_; }
  [[nodiscard]] std::size_t size() const noexcept { return terms_.size(); }
  [[nodiscard]] bool is_zero() const noexcept { return terms_.empty(); }
  [[nodiscard]] bool is_constant() const noexcept;
  /// Coefficient of the monomial 1.
  [[nodiscard]] Coeff constant_term() const noexcept;
  [[nodiscard]] Coeff coefficient(const Monomial& m) const;
  /// Highest total degree; -1 for the zero polynomial.
  [[nodiscard]] int degree() const noexcept;
  /// Smallest and largest variable index that occurs, if any.
  [[nodiscard]] std::optional<std::pair<int, int>> index_range() const;

  TPoly& operator+=(const TPoly& other);
  TPoly& operator-=(const TPoly& other);
  TPoly& operator*=(const TPoly& other);

  friend TPoly operator+(TPoly a, const TPoly& b) { return a += b; }
  friend TPoly operator-(TPoly a, const TPoly& b) { return a -= b; }
  friend TPoly operator*(const TPoly& a, const TPoly& b);
  friend TPoly operator-(const TPoly& a);
  friend bool operator==(const TPoly&, const TPoly&) = default;

  [[nodiscard]] TPoly scaled(Coeff c) const;

 private:
  friend class TPolyAccumulator;
  std::vector<Term> terms_;
};

/// Sends every t_i to t_r with r in {1, ..., n} and r = i mod n.
int reduce_index(int index, int n);
TPoly reduce_mod(const TPoly& p, int n);

/// Exact substitution t_i -> assignment(i). The assignment must cover every
/// variable of p; a missing variable is an InputError.
TPoly substitute(const TPoly& p, const std::map<int, TPoly>& assignment);
TPoly substitute(const TPoly& p, const std::function<TPoly(int)>& assignment);

/// t_i -> t_{i+s}.
TPoly shift_indices(const TPoly& p, int s);

/// Rewrites p in the coordinates y_i = t_{i+1} - t_i, i.e. substitutes
/// t_i -> t_0 + y_1 + ... + y_{i-1}. In the result the variable with index i
/// stands for y_i (i >= 1) and index 0 stands for the offset t_0.
TPoly to_root_coordinates(const TPoly& p);
/// True when every coefficient is nonnegative.
bool has_nonnegative_coefficients(const TPoly& p);

/// Accumulates many sums and products before a single canonicalization.
class TPolyAccumulator {
 public:
  TPolyAccumulator();
  ~TPolyAccumulator();
  TPolyAccumulator(TPolyAccumulator&&) noexcept;
  TPolyAccumulator& operator=(TPolyAccumulator&&) noexcept;

  void add(const TPoly& p, Coeff scale = 1);
  void add_term(const Monomial& m, Coeff c);
  /// this += scale * a * b
  void add_product(const TPoly& a, const TPoly& b, Coeff scale = 1);
  [[nodiscard]] bool empty() const noexcept;
  /// Returns the canonical sum and resets the accumulator.
  TPoly take();

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

// Text form, e.g. "t4^2 - t3*t4 - t2*t4 + t2*t3". Variables with index <= 0
// print as t(i). The parser accepts any expression built from integers,
// variables, +, -, *, ^ (nonnegative integer powers) and parentheses.
std::string to_string(const TPoly& p);
std::string to_latex(const TPoly& p);
TPoly parse_tpoly(std::string_view text);

// JSON form: {"terms":[{"c":1,"e":{"4":2}}, ...]}.
void to_json(nlohmann::json& j, const TPoly& p);
void from_json(const nlohmann::json& j, TPoly& p);

}  // namespace eqrim
