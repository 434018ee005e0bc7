#pragma once

// Elements of QH_T^*(Gr(k,n)) in the Schubert basis.

#include <map>
#include <string>

#include <nlohmann/json_fwd.hpp>

#include "eqrim/partition.hpp"
#include "eqrim/tpoly.hpp"

namespace eqrim {

struct QLabel {
  Partition p;
  int d = 0;

  friend bool operator==(const QLabel&, const QLabel&) = default;
};

/// Lower q-degree first, then larger partitions, then lexicographically larger.
struct QLabelOrder {
  bool operator()(const QLabel& a, const QLabel& b) const noexcept;
};

class QClass {
 public:
  using TermMap = std::map<QLabel, TPoly, QLabelOrder>;

  QClass(int k, int n);
  /// The Schubert class sigma_p, optionally times c * q^d.
  static QClass basis(int k, int n, const Partition& p, int d = 0, TPoly c = 1);

  [[nodiscard]] int k() const noexcept { return k_; }
  [[nodiscard]] int n() const noexcept { return n_; }
  [[nodiscard]] const TermMap& terms() const noexcept { return terms_; }
  [[nodiscard]] bool is_zero() const noexcept { return terms_.empty(); }
  [[nodiscard]] const TPoly& coefficient(const Partition& p, int d) const;

  /// Adds c * q^d * sigma_p. p must be in P_kn (DomainError).
  void add(const Partition& p, int d, const TPoly& c);

  QClass& operator+=(const QClass& o);
  QClass& operator-=(const QClass& o);
  friend QClass operator+(QClass a, const QClass& b) { return a += b; }
  friend QClass operator-(QClass a, const QClass& b) { return a -= b; }
  friend bool operator==(const QClass&, const QClass&) = default;

  [[nodiscard]] QClass scaled(const TPoly& c) const;
  /// Multiplies by q^d.
  [[nodiscard]] QClass shifted_q(int d) const;

 private:
  void check_same_space(const QClass& o) const;

  int k_;
  int n_;
  TermMap terms_;
};

/// Sets every t_i to 0.
QClass specialize_t_zero(const QClass& c);
/// Keeps the q-degree 0 part.
QClass specialize_q_zero(const QClass& c);
/// True when every term satisfies |p| + d*n + deg(coefficient) = degree and
/// every coefficient is homogeneous.
bool is_homogeneous(const QClass& c, int degree);

/// "(t4 - t3)*s[2,1] + q*s[1]"; the empty partition prints as s[].
std::string to_string(const QClass& c);
std::string to_latex(const QClass& c);
void to_json(nlohmann::json& j, const QClass& c);
/// Needs a json object with k, n and terms.
QClass qclass_from_json(const nlohmann::json& j);

}  // namespace eqrim
