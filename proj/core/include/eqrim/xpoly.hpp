#pragma once

// Polynomials in x_1..x_k (k <= kMaxVars) with TPoly coefficients.

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <string>

#include "eqrim/tpoly.hpp"

namespace eqrim {

inline constexpr int kMaxVars = 6;

using XExponent = std::array<std::uint8_t, kMaxVars>;

int x_degree(const XExponent& e) noexcept;

/// Higher x-degree first, then lexicographically larger first.
struct XExponentOrder {
  bool operator()(const XExponent& a, const XExponent& b) const noexcept;
};

class XPoly {
 public:
  using TermMap = std::map<XExponent, TPoly, XExponentOrder>;

  explicit XPoly(int k);
  static XPoly constant(int k, TPoly c);
  /// x_i, 1-based.
  static XPoly x(int k, int i);

  [[nodiscard]] int num_vars() const noexcept { return k_; }
  [[nodiscard]] const TermMap& terms() const noexcept { return terms_; }
  [[nodiscard]] bool is_zero() const noexcept { return terms_.empty(); }
  [[nodiscard]] const TPoly& coefficient(const XExponent& e) const;
  /// Highest x-degree; -1 for zero.
  [[nodiscard]] int degree() const noexcept;

  /// Adds c * x^e.
  void add_term(const XExponent& e, const TPoly& c);

  XPoly& operator+=(const XPoly& o);
  XPoly& operator-=(const XPoly& o);
  friend XPoly operator+(XPoly a, const XPoly& b) { return a += b; }
  friend XPoly operator-(XPoly a, const XPoly& b) { return a -= b; }
  friend XPoly operator*(const XPoly& a, const XPoly& b);
  friend bool operator==(const XPoly&, const XPoly&) = default;

  [[nodiscard]] XPoly scaled(const TPoly& c) const;

 private:
  int k_;
  TermMap terms_;
};

/// Exchanges x_i and x_j (1-based).
XPoly swap_variables(const XPoly& p, int i, int j);
bool is_symmetric(const XPoly& p);
/// Substitutes x_i -> values[i-1].
TPoly evaluate(const XPoly& p, const std::vector<TPoly>& values);
/// The homogeneous part of top x-degree.
XPoly top_part(const XPoly& p);
XPoly map_coefficients(const XPoly& p, const std::function<TPoly(const TPoly&)>& f);

/// e.g. "x1 + x2 - t2 - t1"; mixed terms print as c*x^a*t-monomial.
std::string to_string(const XPoly& p);

}  // namespace eqrim
