#pragma once

// Factorial Schur polynomials s_lambda(x|t) in k variables and expansion of
// symmetric polynomials in that basis.

#include <map>

#include "eqrim/partition.hpp"
#include "eqrim/tpoly.hpp"
#include "eqrim/xpoly.hpp"

namespace eqrim {

/// The weight sequence i -> t_{shift+i}. Shift a is tau^a applied to t.
struct WeightSeq {
  int shift = 0;

  [[nodiscard]] int index(int i) const noexcept { return shift + i; }
  [[nodiscard]] WeightSeq then(int a) const noexcept { return WeightSeq{shift + a}; }
  friend bool operator==(const WeightSeq&, const WeightSeq&) = default;
};

/// Sum over semistandard tableaux T of shape p with entries in 1..k of the
/// product over boxes (x_{T(a)} - t_{T(a)+c(a)}), c = column - row. Zero if
/// p has more than k rows.
XPoly factorial_schur_ssyt(const Partition& p, int k, WeightSeq w = {});
/// Coefficient of x^e in s_p(x|w), computed by the branching rule with a
/// per-thread memo. Never builds the full polynomial.
TPoly factorial_schur_coefficient(const Partition& p, int k, WeightSeq w, const XExponent& e);

/// h_m(x|w); 1 for m = 0 and 0 for m < 0.
XPoly factorial_h(int m, int k, WeightSeq w = {});
/// s_p(x|w) with every weight index reduced mod n. Built factor by factor, so
/// large shapes stay small.
XPoly cyclic_factorial_schur(const Partition& p, int k, int n, WeightSeq w = {});
XPoly cyclic_factorial_h(int m, int k, int n, WeightSeq w = {});
/// Coefficient of x^e in cyclic_factorial_schur(p, k, n, w).
TPoly cyclic_factorial_schur_coefficient(const Partition& p, int k, int n, WeightSeq w, const XExponent& e);
/// e_r(x|w) = s_{(1^r)}(x|w); 0 for r > k.
XPoly factorial_e(int r, int k, WeightSeq w = {});
/// det(h_{p_i+j-i}(x | tau^{1-j} w)) for i, j = 1..k.
XPoly jacobi_trudi(const Partition& p, int k, WeightSeq w = {});
/// Ordinary Schur polynomial via the ordinary Jacobi-Trudi determinant.
XPoly schur(const Partition& p, int k);

using FactorialExpansion = std::map<Partition, TPoly>;

/// Writes a symmetric p as a sum of c_lambda * s_lambda(x|w). InputError for
/// non-symmetric input; InvariantError if the subtraction leaves a remainder.
FactorialExpansion expand_in_factorial_schur(const XPoly& p, int k, WeightSeq w = {});
/// The same in the basis cyclic_factorial_schur(lambda, k, n, w). For p with
/// indices already reduced mod n this equals expand_in_factorial_schur
/// followed by reducing every coefficient, since both bases are unitriangular.
FactorialExpansion expand_in_cyclic_factorial_schur(const XPoly& p, int k, int n, WeightSeq w = {});

enum class SupportMode {
  /// Only try labels containing both factors (all others vanish).
  kPruned,
  /// Try every label up to the degree bound.
  kFull,
};

/// Expansion of s_a(x|w) * s_b(x|w) without forming the product: processes
/// dominant exponents in decreasing order and reads each leading coefficient
/// off a convolution of memoized coefficients.
FactorialExpansion expand_product(const Partition& a, const Partition& b, int k, WeightSeq w = {},
                                  SupportMode mode = SupportMode::kPruned);

/// Sum of c * s_lambda(x|w) as a polynomial.
XPoly recombine(const FactorialExpansion& e, int k, WeightSeq w = {});

/// Drops the per-thread memo tables.
void clear_factorial_schur_memo();

}  // namespace eqrim
