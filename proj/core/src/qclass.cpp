#include "eqrim/qclass.hpp"

#include <nlohmann/json.hpp>

#include "eqrim/error.hpp"

namespace eqrim {

bool QLabelOrder::operator()(const QLabel& a, const QLabel& b) const noexcept {
  if (a.d != b.d) return a.d < b.d;
  if (a.p.boxes() != b.p.boxes()) return a.p.boxes() > b.p.boxes();
  return a.p > b.p;
}

QClass::QClass(int k, int n) : k_(k), n_(n) {
  if (k < 0 || n < k) throw InputError("need 0 <= k <= n");
}

QClass QClass::basis(int k, int n, const Partition& p, int d, TPoly c) {
  QClass out(k, n);
  out.add(p, d, c);
  return out;
}

const TPoly& QClass::coefficient(const Partition& p, int d) const {
  static const TPoly zero;
  auto it = terms_.find(QLabel{p, d});
  return it == terms_.end() ? zero : it->second;
}

void QClass::add(const Partition& p, int d, const TPoly& c) {
  if (c.is_zero()) return;
  require_in_box(p, k_, n_);
  if (d < 0) throw InputError("negative q-degree");
  auto [it, inserted] = terms_.try_emplace(QLabel{p, d}, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void QClass::check_same_space(const QClass& o) const {
  if (o.k_ != k_ || o.n_ != n_) throw InputError("classes live in different quantum rings");
}

QClass& QClass::operator+=(const QClass& o) {
  check_same_space(o);
  for (const auto& [label, c] : o.terms_) add(label.p, label.d, c);
  return *this;
}

QClass& QClass::operator-=(const QClass& o) {
  check_same_space(o);
  for (const auto& [label, c] : o.terms_) add(label.p, label.d, -c);
  return *this;
}

QClass QClass::scaled(const TPoly& c) const {
  QClass out(k_, n_);
  if (c.is_zero()) return out;
  for (const auto& [label, v] : terms_) out.add(label.p, label.d, v * c);
  return out;
}

QClass QClass::shifted_q(int d) const {
  QClass out(k_, n_);
  for (const auto& [label, v] : terms_) out.add(label.p, label.d + d, v);
  return out;
}

QClass specialize_t_zero(const QClass& c) {
  QClass out(c.k(), c.n());
  for (const auto& [label, v] : c.terms()) out.add(label.p, label.d, v.constant_term());
  return out;
}

QClass specialize_q_zero(const QClass& c) {
  QClass out(c.k(), c.n());
  for (const auto& [label, v] : c.terms()) {
    if (label.d == 0) out.add(label.p, 0, v);
  }
  return out;
}

bool is_homogeneous(const QClass& c, int degree) {
  for (const auto& [label, v] : c.terms()) {
    for (const auto& t : v.terms()) {
      if (label.p.boxes() + label.d * c.n() + t.monomial.degree() != degree) return false;
    }
  }
  return true;
}

namespace {

std::string label_text(const QLabel& l) {
  std::string s;
  if (l.d == 1) s += "q*";
  if (l.d > 1) s += "q^" + std::to_string(l.d) + "*";
  s += "s[" + (l.p.empty() ? std::string{} : to_string(l.p)) + "]";
  return s;
}

std::string label_latex(const QLabel& l) {
  std::string s;
  if (l.d == 1) s += "q ";
  if (l.d > 1) s += "q^{" + std::to_string(l.d) + "} ";
  s += "\\sigma_{" + (l.p.empty() ? std::string("\\emptyset") : "(" + to_string(l.p) + ")") + "}";
  return s;
}

}  // namespace

std::string to_string(const QClass& c) {
  if (c.is_zero()) return "0";
  std::string out;
  for (const auto& [label, v] : c.terms()) {
    bool single = v.size() == 1;
    bool negative_unit = single && v.terms()[0].monomial.is_one() && v.terms()[0].coeff == -1;
    if (v == TPoly(1)) {
      out += out.empty() ? "" : " + ";
    } else if (negative_unit) {
      out += out.empty() ? "-" : " - ";
    } else {
      out += (out.empty() ? "" : " + ") + ("(" + to_string(v) + ")*");
    }
    out += label_text(label);
  }
  return out;
}

std::string to_latex(const QClass& c) {
  if (c.is_zero()) return "0";
  std::string out;
  for (const auto& [label, v] : c.terms()) {
    if (!out.empty()) out += " + ";
    if (!(v == TPoly(1))) out += "\\left(" + to_latex(v) + "\\right) ";
    out += label_latex(label);
  }
  return out;
}

void to_json(nlohmann::json& j, const QClass& c) {
  auto terms = nlohmann::json::array();
  for (const auto& [label, v] : c.terms()) {
    terms.push_back({{"p", label.p.parts()}, {"q", label.d}, {"c", v}});
  }
  j = nlohmann::json{{"k", c.k()}, {"n", c.n()}, {"terms", std::move(terms)}};
}

QClass qclass_from_json(const nlohmann::json& j) {
  try {
    QClass out(j.at("k").get<int>(), j.at("n").get<int>());
    for (const auto& t : j.at("terms")) {
      out.add(Partition(t.at("p").get<std::vector<int>>()), t.at("q").get<int>(), t.at("c").get<TPoly>());
    }
    return out;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed class JSON: ") + e.what());
  }
}

}  // namespace eqrim
