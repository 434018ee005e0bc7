#include "eqrim/facschur.hpp"

#include <algorithm>
#include <bit>
#include <optional>
#include <functional>
#include <numeric>

#include <absl/container/flat_hash_map.h>

#include "eqrim/error.hpp"

namespace eqrim {

namespace {

void check_k(int k) {
  if (k < 0 || k > kMaxVars) throw InputError("number of x variables must be in 0.." + std::to_string(kMaxVars));
}

// Calls f(mu, indices) for every mu with at most m-1 rows such that p/mu is a
// horizontal strip; indices are the weight indices of the strip boxes when
// they are filled with m.
void for_each_strip(const Partition& p, int m, WeightSeq w,
                    const std::function<void(const Partition&, const std::vector<int>&)>& f) {
  if (p.length() > m) return;
  std::vector<int> mu(static_cast<std::size_t>(std::max(m - 1, 0)), 0);
  std::vector<int> idx;
  std::function<void(int)> rec = [&](int row) {  // row is 0-based
    if (row == m - 1 || m == 0) {
      idx.clear();
      for (int i = 0; i < m; ++i) {
        int lo = i < m - 1 ? mu[static_cast<std::size_t>(i)] : 0;
        for (int j = lo + 1; j <= p[static_cast<std::size_t>(i)]; ++j) idx.push_back(w.index(m + j - (i + 1)));
      }
      f(Partition(mu), idx);
      return;
    }
    int hi = p[static_cast<std::size_t>(row)];
    int lo = p[static_cast<std::size_t>(row + 1)];
    for (int v = lo; v <= hi; ++v) {
      mu[static_cast<std::size_t>(row)] = v;
      rec(row + 1);
    }
  };
  rec(0);
}

// E[j] = e_j(t_i : i in indices).
std::vector<TPoly> elementary(const std::vector<int>& indices) {
  std::vector<TPoly> e(indices.size() + 1);
  e[0] = 1;
  for (std::size_t n = 0; n < indices.size(); ++n) {
    TPoly t = TPoly::variable(indices[n]);
    for (std::size_t j = n + 1; j >= 1; --j) e[j] += e[j - 1] * t;
  }
  return e;
}

// Coefficient of x^a in prod_i (x - t_{indices[i]}).
TPoly linear_product_coefficient(const std::vector<TPoly>& e, int a) {
  int r = static_cast<int>(e.size()) - 1;
  if (a < 0 || a > r) return TPoly{};
  const TPoly& c = e[static_cast<std::size_t>(r - a)];
  return (r - a) % 2 == 0 ? c : -c;
}

struct CoeffKey {
  std::int32_t shift;
  std::int32_t modulus;
  std::int32_t m;
  std::array<std::uint8_t, kMaxVars> parts;
  XExponent prefix;

  friend bool operator==(const CoeffKey&, const CoeffKey&) = default;
  template <typename H>
  friend H AbslHashValue(H h, const CoeffKey& key) {
    return H::combine(std::move(h), key.shift, key.modulus, key.m, key.parts, key.prefix);
  }
};

struct HKey {
  int m;
  int k;
  int shift;
  friend bool operator==(const HKey&, const HKey&) = default;
  template <typename H>
  friend H AbslHashValue(H h, const HKey& key) {
    return H::combine(std::move(h), key.m, key.k, key.shift);
  }
};

struct Memo {
  absl::flat_hash_map<CoeffKey, TPoly> coeff;
  absl::flat_hash_map<HKey, XPoly> h;
};

Memo& memo() {
  thread_local Memo m;
  return m;
}

// modulus as in ssyt_rec.
TPoly coefficient_rec(const Partition& p, int m, WeightSeq w, int modulus, const XExponent& e) {
  if (p.length() > m) return TPoly{};
  int want = 0;
  for (int i = 0; i < m; ++i) want += e[static_cast<std::size_t>(i)];
  if (want > p.boxes()) return TPoly{};
  if (m == 0) return TPoly(1);
  for (int i = 0; i < m; ++i) {
    if (e[static_cast<std::size_t>(i)] > p[0]) return TPoly{};
  }
  CoeffKey key{w.shift, modulus, m, {}, {}};
  for (int i = 0; i < p.length(); ++i) {
    if (p[static_cast<std::size_t>(i)] > 255) throw ArithmeticOverflow("partition part too large for the memo");
    key.parts[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(p[static_cast<std::size_t>(i)]);
  }
  for (int i = 0; i < m; ++i) key.prefix[static_cast<std::size_t>(i)] = e[static_cast<std::size_t>(i)];
  auto& table = memo().coeff;
  if (auto it = table.find(key); it != table.end()) return it->second;

  int a = e[static_cast<std::size_t>(m - 1)];
  TPolyAccumulator acc;
  for_each_strip(p, m, w, [&](const Partition& mu, const std::vector<int>& idx) {
    if (static_cast<int>(idx.size()) < a) return;
    TPoly lower = coefficient_rec(mu, m - 1, w, modulus, e);
    if (lower.is_zero()) return;
    std::vector<int> reduced = idx;
    if (modulus > 0) {
      for (auto& i : reduced) i = reduce_index(i, modulus);
    }
    acc.add_product(lower, linear_product_coefficient(elementary(reduced), a));
  });
  TPoly result = acc.take();
  table.emplace(key, result);
  return result;
}

// modulus 0 keeps weight indices as they are; otherwise every weight index
// is reduced mod modulus as the factors are built.
XPoly ssyt_rec(const Partition& p, int m, int k, WeightSeq w, int modulus,
               std::map<std::pair<Partition, int>, XPoly>& cache) {
  if (p.length() > m) return XPoly(k);
  if (m == 0) return XPoly::constant(k, 1);
  auto key = std::pair{p, m};
  if (auto it = cache.find(key); it != cache.end()) return it->second;
  XPoly total(k);
  for_each_strip(p, m, w, [&](const Partition& mu, const std::vector<int>& idx) {
    XPoly lower = ssyt_rec(mu, m - 1, k, w, modulus, cache);
    if (lower.is_zero()) return;
    std::vector<int> reduced = idx;
    if (modulus > 0) {
      for (auto& i : reduced) i = reduce_index(i, modulus);
    }
    std::vector<TPoly> e = elementary(reduced);
    XPoly strip(k);
    for (int a = 0; a <= static_cast<int>(idx.size()); ++a) {
      XExponent x{};
      x[static_cast<std::size_t>(m - 1)] = static_cast<std::uint8_t>(a);
      strip.add_term(x, linear_product_coefficient(e, a));
    }
    total += lower * strip;
  });
  cache.emplace(key, total);
  return total;
}

// Determinant by expansion along rows with memoized column subsets.
XPoly determinant(const std::vector<std::vector<XPoly>>& mat, int k) {
  const int size = static_cast<int>(mat.size());
  if (size == 0) return XPoly::constant(k, 1);
  std::vector<std::optional<XPoly>> f(std::size_t{1} << size);
  f[0] = XPoly::constant(k, 1);
  for (unsigned s = 1; s < f.size(); ++s) {
    int r = std::popcount(s);
    XPoly acc(k);
    int pos = 0;
    for (int j = 0; j < size; ++j) {
      if (!(s & (1u << j))) continue;
      const XPoly& entry = mat[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(j)];
      if (!entry.is_zero()) {
        const XPoly& minor = *f[s & ~(1u << j)];
        XPoly term = entry * minor;
        if ((r - 1 + pos) % 2 == 0) {
          acc += term;
        } else {
          acc -= term;
        }
      }
      ++pos;
    }
    f[s] = std::move(acc);
  }
  return *f.back();
}

XPoly ordinary_h(int m, int k) {
  XPoly out(k);
  if (m < 0) return out;
  XExponent e{};
  std::function<void(int, int)> rec = [&](int i, int left) {
    if (i == k - 1) {
      e[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(left);
      out.add_term(e, TPoly(1));
      return;
    }
    for (int v = 0; v <= left; ++v) {
      e[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(v);
      rec(i + 1, left - v);
    }
  };
  if (k == 0) {
    if (m == 0) out.add_term(e, TPoly(1));
    return out;
  }
  rec(0, m);
  return out;
}

XExponent exponent_of(const Partition& p) {
  XExponent e{};
  for (int i = 0; i < p.length(); ++i) {
    if (p[static_cast<std::size_t>(i)] > 255) throw ArithmeticOverflow("exponent too large");
    e[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(p[static_cast<std::size_t>(i)]);
  }
  return e;
}

// Leading-term subtraction over the given labels, which must be listed in
// decreasing (size, lex) order and include every label that can occur.
using BasisCoefficient = std::function<TPoly(const Partition&, const XExponent&)>;

FactorialExpansion subtract_leading_terms(const std::vector<Partition>& labels, const BasisCoefficient& basis,
                                          const std::function<TPoly(const XExponent&)>& coeff_at) {
  FactorialExpansion found;
  std::vector<std::pair<Partition, TPoly>> order;
  for (const auto& alpha : labels) {
    XExponent e = exponent_of(alpha);
    TPolyAccumulator acc;
    acc.add(coeff_at(e));
    for (const auto& [gamma, c] : order) {
      TPoly s = basis(gamma, e);
      if (!s.is_zero()) acc.add_product(c, s, -1);
    }
    TPoly r = acc.take();
    if (!r.is_zero()) {
      order.emplace_back(alpha, r);
      found.emplace(alpha, std::move(r));
    }
  }
  return found;
}

std::vector<Partition> labels_up_to(int k, int max_boxes, int max_part) {
  std::vector<Partition> out;
  for (int m = max_boxes; m >= 0; --m) {
    for (auto& p : partitions_of(m, k)) {
      if (p[0] <= max_part) out.push_back(std::move(p));
    }
  }
  // partitions_of yields decreasing lex order within a size already
  std::stable_sort(out.begin(), out.end(), [](const Partition& a, const Partition& b) {
    if (a.boxes() != b.boxes()) return a.boxes() > b.boxes();
    return a > b;
  });
  return out;
}

}  // namespace

TPoly factorial_schur_coefficient(const Partition& p, int k, WeightSeq w, const XExponent& e) {
  check_k(k);
  for (int i = k; i < kMaxVars; ++i) {
    if (e[static_cast<std::size_t>(i)] != 0) return TPoly{};
  }
  return coefficient_rec(p, k, w, 0, e);
}

TPoly cyclic_factorial_schur_coefficient(const Partition& p, int k, int n, WeightSeq w, const XExponent& e) {
  check_k(k);
  if (n < 1) throw InputError("cyclic factorial Schur needs n >= 1");
  for (int i = k; i < kMaxVars; ++i) {
    if (e[static_cast<std::size_t>(i)] != 0) return TPoly{};
  }
  return coefficient_rec(p, k, w, n, e);
}

XPoly factorial_schur_ssyt(const Partition& p, int k, WeightSeq w) {
  check_k(k);
  std::map<std::pair<Partition, int>, XPoly> cache;
  return ssyt_rec(p, k, k, w, 0, cache);
}

XPoly cyclic_factorial_schur(const Partition& p, int k, int n, WeightSeq w) {
  check_k(k);
  if (n < 1) throw InputError("cyclic factorial Schur needs n >= 1");
  std::map<std::pair<Partition, int>, XPoly> cache;
  return ssyt_rec(p, k, k, w, n, cache);
}

XPoly cyclic_factorial_h(int m, int k, int n, WeightSeq w) {
  if (m < 0) return XPoly(k);
  return cyclic_factorial_schur(Partition{m}, k, n, w);
}

XPoly factorial_h(int m, int k, WeightSeq w) {
  check_k(k);
  if (m < 0) return XPoly(k);
  if (m == 0) return XPoly::constant(k, 1);
  auto& table = memo().h;
  HKey key{m, k, w.shift};
  if (auto it = table.find(key); it != table.end()) return it->second;
  XPoly h = factorial_schur_ssyt(Partition{m}, k, w);
  table.emplace(key, h);
  return h;
}

XPoly factorial_e(int r, int k, WeightSeq w) {
  check_k(k);
  if (r < 0) throw InputError("factorial_e needs r >= 0");
  if (r > k) return XPoly(k);
  return factorial_schur_ssyt(Partition(std::vector<int>(static_cast<std::size_t>(r), 1)), k, w);
}

XPoly jacobi_trudi(const Partition& p, int k, WeightSeq w) {
  check_k(k);
  if (p.length() > k) return XPoly(k);
  std::vector<std::vector<XPoly>> mat;
  for (int i = 1; i <= k; ++i) {
    std::vector<XPoly> row;
    for (int j = 1; j <= k; ++j) {
      row.push_back(factorial_h(p[static_cast<std::size_t>(i - 1)] + j - i, k, w.then(1 - j)));
    }
    mat.push_back(std::move(row));
  }
  return determinant(mat, k);
}

XPoly schur(const Partition& p, int k) {
  check_k(k);
  if (p.length() > k) return XPoly(k);
  std::vector<std::vector<XPoly>> mat;
  for (int i = 1; i <= k; ++i) {
    std::vector<XPoly> row;
    for (int j = 1; j <= k; ++j) row.push_back(ordinary_h(p[static_cast<std::size_t>(i - 1)] + j - i, k));
    mat.push_back(std::move(row));
  }
  return determinant(mat, k);
}

namespace {

FactorialExpansion expand_with_basis(const XPoly& p, int k, const BasisCoefficient& basis) {
  check_k(k);
  if (p.num_vars() != k) throw InputError("polynomial has the wrong number of x variables");
  if (!is_symmetric(p)) throw InputError("cannot expand a non-symmetric polynomial in a Schur basis");
  if (p.is_zero()) return {};
  int max_part = 0;
  for (const auto& [e, c] : p.terms()) max_part = std::max<int>(max_part, e[0]);
  auto labels = labels_up_to(k, p.degree(), max_part);
  FactorialExpansion out =
      subtract_leading_terms(labels, basis, [&p](const XExponent& e) { return p.coefficient(e); });
  // Every exponent of p must be reproduced.
  for (const auto& [e, c] : p.terms()) {
    TPolyAccumulator acc;
    acc.add(c);
    for (const auto& [gamma, coef] : out) acc.add_product(coef, basis(gamma, e), -1);
    if (!acc.take().is_zero()) throw InvariantError("factorial Schur expansion left a nonzero remainder");
  }
  return out;
}

}  // namespace

FactorialExpansion expand_in_factorial_schur(const XPoly& p, int k, WeightSeq w) {
  return expand_with_basis(
      p, k, [k, w](const Partition& g, const XExponent& e) { return factorial_schur_coefficient(g, k, w, e); });
}

FactorialExpansion expand_in_cyclic_factorial_schur(const XPoly& p, int k, int n, WeightSeq w) {
  return expand_with_basis(p, k, [k, n, w](const Partition& g, const XExponent& e) {
    return cyclic_factorial_schur_coefficient(g, k, n, w, e);
  });
}

FactorialExpansion expand_product(const Partition& a, const Partition& b, int k, WeightSeq w, SupportMode mode) {
  check_k(k);
  if (a.length() > k || b.length() > k) return {};
  const int max_part = a[0] + b[0];
  std::vector<Partition> labels;
  for (auto& g : labels_up_to(k, a.boxes() + b.boxes(), max_part)) {
    if (mode == SupportMode::kPruned && !(g.contains(a) && g.contains(b))) continue;
    labels.push_back(std::move(g));
  }
  auto coeff_at = [&](const XExponent& alpha) {
    TPolyAccumulator acc;
    XExponent beta{};
    std::function<void(int, int)> rec = [&](int i, int used) {
      if (i == k) {
        XExponent rest{};
        int rest_total = 0;
        for (int j = 0; j < k; ++j) {
          rest[static_cast<std::size_t>(j)] =
              static_cast<std::uint8_t>(alpha[static_cast<std::size_t>(j)] - beta[static_cast<std::size_t>(j)]);
          rest_total += rest[static_cast<std::size_t>(j)];
          if (rest[static_cast<std::size_t>(j)] > b[0]) return;
        }
        if (rest_total > b.boxes()) return;
        TPoly ca = factorial_schur_coefficient(a, k, w, beta);
        if (ca.is_zero()) return;
        TPoly cb = factorial_schur_coefficient(b, k, w, rest);
        if (!cb.is_zero()) acc.add_product(ca, cb);
        return;
      }
      int hi = std::min<int>(alpha[static_cast<std::size_t>(i)], a[0]);
      for (int v = 0; v <= hi && used + v <= a.boxes(); ++v) {
        beta[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(v);
        rec(i + 1, used + v);
      }
      beta[static_cast<std::size_t>(i)] = 0;
    };
    rec(0, 0);
    return acc.take();
  };
  return subtract_leading_terms(
      labels, [k, w](const Partition& g, const XExponent& e) { return factorial_schur_coefficient(g, k, w, e); },
      coeff_at);
}

XPoly recombine(const FactorialExpansion& e, int k, WeightSeq w) {
  XPoly out(k);
  for (const auto& [p, c] : e) out += factorial_schur_ssyt(p, k, w).scaled(c);
  return out;
}

void clear_factorial_schur_memo() {
  memo().coeff.clear();
  memo().h.clear();
}

}  // namespace eqrim
