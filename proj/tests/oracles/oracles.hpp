#pragma once

// Slow reference implementations used only by the tests. None of them calls
// into the factorial Schur, eqlr or rim hook code of the library; they share
// only the plain data types (Partition, TPoly, XPoly).

#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <vector>

#include "eqrim/partition.hpp"
#include "eqrim/tpoly.hpp"
#include "eqrim/xpoly.hpp"

namespace eqrim::oracle {

using Int = std::int64_t;
/// Intermediate products of evaluations can pass 64 bits.
using Wide = __int128;
/// A filling, row by row.
using Tableau = std::vector<std::vector<int>>;

/// Every filling of p with entries 1..k, kept when rows weakly increase and
/// columns strictly increase. Exponential; fine up to about 12 boxes.
std::vector<Tableau> ssyt_brute(const Partition& p, int k);

/// s_p(x|t) summed over ssyt_brute, factor (x_a - t_{a + col - row + shift}).
XPoly factorial_schur_brute(const Partition& p, int k, int shift = 0);

/// A numeric torus point: t_i -> value(i), injective on the indices used.
struct TorusPoint {
  explicit TorusPoint(std::uint64_t seed);
  [[nodiscard]] Int operator()(int index) const;

 private:
  std::map<int, Int> values_;
};

Int eval(const TPoly& p, const TorusPoint& t);
Wide eval_factorial_schur(const Partition& p, int k, const std::vector<Int>& x, const TorusPoint& t, int shift = 0);
/// x_i = t_{mu_{k+1-i} + i}, the point where s_lambda(x|t) vanishes unless
/// lambda is contained in mu.
std::vector<Int> vanishing_point(const Partition& mu, int k, const TorusPoint& t);

/// Coefficients of a symmetric f in factorial Schur polynomials, at the torus
/// point t, for every label of `labels`. Labels must be closed under taking
/// subdiagrams. Solved by triangular evaluation at the vanishing points.
std::map<Partition, Int> expand_by_evaluation(const std::function<Wide(const std::vector<Int>&)>& f,
                                              const std::vector<Partition>& labels, int k, const TorusPoint& t);

/// All partitions with at most k rows and at most n - k columns.
std::vector<Partition> box(int k, int n);

/// Ordinary Littlewood-Richardson number c^nu_{lambda mu}: counts fillings of
/// nu/lambda with content mu, rows weak, columns strict, and reverse reading
/// word a lattice word.
Int lr_tableaux(const Partition& lambda, const Partition& mu, const Partition& nu);

struct StrippedCore {
  Partition core;
  int d = 0;
  int sign = 1;
};

/// Partitions mu inside gamma such that gamma/mu is a connected skew shape of
/// n cells with no 2x2 square, paired with the number of rows the strip uses.
std::vector<std::pair<Partition, int>> removable_strips(const Partition& gamma, int n);
/// Removes strips in random order until none is left; sign multiplies
/// (-1)^(rows - k) per strip.
StrippedCore strip_randomly(const Partition& gamma, int n, int k, std::mt19937_64& rng);

}  // namespace eqrim::oracle
