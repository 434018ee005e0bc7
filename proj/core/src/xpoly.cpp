#include "eqrim/xpoly.hpp"

#include <algorithm>
#include <utility>

#include "eqrim/error.hpp"

namespace eqrim {

int x_degree(const XExponent& e) noexcept {
  int d = 0;
  for (auto v : e) d += v;
  return d;
}

bool XExponentOrder::operator()(const XExponent& a, const XExponent& b) const noexcept {
  int da = x_degree(a);
  int db = x_degree(b);
  if (da != db) return da > db;
  return a > b;
}

XPoly::XPoly(int k) : k_(k) {
  if (k < 0 || k > kMaxVars) throw InputError("number of x variables must be in 0.." + std::to_string(kMaxVars));
}

XPoly XPoly::constant(int k, TPoly c) {
  XPoly p(k);
  p.add_term(XExponent{}, c);
  return p;
}

XPoly XPoly::x(int k, int i) {
  XPoly p(k);
  if (i < 1 || i > k) throw InputError("x variable index out of range");
  XExponent e{};
  e[static_cast<std::size_t>(i - 1)] = 1;
  p.add_term(e, TPoly(1));
  return p;
}

const TPoly& XPoly::coefficient(const XExponent& e) const {
  static const TPoly zero;
  auto it = terms_.find(e);
  return it == terms_.end() ? zero : it->second;
}

int XPoly::degree() const noexcept { return terms_.empty() ? -1 : x_degree(terms_.begin()->first); }

void XPoly::add_term(const XExponent& e, const TPoly& c) {
  if (c.is_zero()) return;
  for (int i = k_; i < kMaxVars; ++i) {
    if (e[static_cast<std::size_t>(i)] != 0) throw InputError("exponent mentions a variable beyond x_k");
  }
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

XPoly& XPoly::operator+=(const XPoly& o) {
  if (o.k_ != k_) throw InputError("adding polynomials in different numbers of variables");
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

XPoly& XPoly::operator-=(const XPoly& o) {
  if (o.k_ != k_) throw InputError("subtracting polynomials in different numbers of variables");
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

XPoly operator*(const XPoly& a, const XPoly& b) {
  if (a.k_ != b.k_) throw InputError("multiplying polynomials in different numbers of variables");
  std::map<XExponent, TPolyAccumulator, XExponentOrder> acc;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      XExponent e{};
      for (std::size_t i = 0; i < e.size(); ++i) {
        unsigned s = unsigned{ea[i]} + eb[i];
        if (s > 255) throw ArithmeticOverflow("x exponent out of range");
        e[i] = static_cast<std::uint8_t>(s);
      }
      acc[e].add_product(ca, cb);
    }
  }
  XPoly out(a.k_);
  for (auto& [e, c] : acc) {
    TPoly v = c.take();
    if (!v.is_zero()) out.terms_.emplace_hint(out.terms_.end(), e, std::move(v));
  }
  return out;
}

XPoly XPoly::scaled(const TPoly& c) const {
  XPoly out(k_);
  if (c.is_zero()) return out;
  for (const auto& [e, v] : terms_) out.terms_.emplace_hint(out.terms_.end(), e, v * c);
  return out;
}

XPoly swap_variables(const XPoly& p, int i, int j) {
  if (i < 1 || j < 1 || i > p.num_vars() || j > p.num_vars()) throw InputError("x variable index out of range");
  XPoly out(p.num_vars());
  for (const auto& [e, c] : p.terms()) {
    XExponent f = e;
    std::swap(f[static_cast<std::size_t>(i - 1)], f[static_cast<std::size_t>(j - 1)]);
    out.add_term(f, c);
  }
  return out;
}

bool is_symmetric(const XPoly& p) {
  for (int i = 1; i < p.num_vars(); ++i) {
    if (!(swap_variables(p, i, i + 1) == p)) return false;
  }
  return true;
}

TPoly evaluate(const XPoly& p, const std::vector<TPoly>& values) {
  if (static_cast<int>(values.size()) != p.num_vars()) throw InputError("wrong number of values for evaluation");
  std::map<std::pair<int, int>, TPoly> powers;
  auto power = [&](int i, int e) -> const TPoly& {
    auto [it, inserted] = powers.try_emplace({i, e});
    if (inserted) {
      TPoly r = 1;
      for (int s = 0; s < e; ++s) r *= values[static_cast<std::size_t>(i)];
      it->second = std::move(r);
    }
    return it->second;
  };
  TPolyAccumulator acc;
  for (const auto& [e, c] : p.terms()) {
    TPoly m = c;
    for (int i = 0; i < p.num_vars(); ++i) {
      if (e[static_cast<std::size_t>(i)] != 0) m *= power(i, e[static_cast<std::size_t>(i)]);
    }
    acc.add(m);
  }
  return acc.take();
}

XPoly top_part(const XPoly& p) {
  XPoly out(p.num_vars());
  int d = p.degree();
  for (const auto& [e, c] : p.terms()) {
    if (x_degree(e) != d) break;
    out.add_term(e, c);
  }
  return out;
}

XPoly map_coefficients(const XPoly& p, const std::function<TPoly(const TPoly&)>& f) {
  XPoly out(p.num_vars());
  for (const auto& [e, c] : p.terms()) out.add_term(e, f(c));
  return out;
}

std::string to_string(const XPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (const auto& [e, c] : p.terms()) {
    std::string xs;
    for (int i = 0; i < p.num_vars(); ++i) {
      int a = e[static_cast<std::size_t>(i)];
      if (a == 0) continue;
      if (!xs.empty()) xs += "*";
      xs += "x" + std::to_string(i + 1);
      if (a != 1) xs += "^" + std::to_string(a);
    }
    for (const auto& t : c.terms()) {
      std::string ts = to_string(TPoly::monomial(t.monomial, 1));
      std::string mono = xs;
      if (!t.monomial.is_one()) mono += (mono.empty() ? "" : "*") + ts;
      Coeff v = t.coeff;
      bool neg = v < 0;
      if (out.empty()) {
        if (neg) out += "-";
      } else {
        out += neg ? " - " : " + ";
      }
      std::uint64_t mag = neg ? 0 - static_cast<std::uint64_t>(v) : static_cast<std::uint64_t>(v);
      if (mono.empty()) {
        out += std::to_string(mag);
      } else if (mag == 1) {
        out += mono;
      } else {
        out += std::to_string(mag) + "*" + mono;
      }
    }
  }
  return out;
}

}  // namespace eqrim
