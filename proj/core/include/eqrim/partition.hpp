#pragma once

// Partitions, the k x (n-k) box, covers and n-rim hook stripping.

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "eqrim/tpoly.hpp"

namespace eqrim {

/// Weakly decreasing sequence of positive parts (trailing zeros are trimmed on
/// construction).
class Partition {
 public:
  Partition() = default;
  /// Throws InputError on negative or increasing parts.
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  [[nodiscard]] const std::vector<int>& parts() const noexcept { return parts_; }
  [[nodiscard]] int length() const noexcept { return static_cast<int>(parts_.size()); }
  [[nodiscard]] int boxes() const noexcept { return boxes_; }
  [[nodiscard]] bool empty() const noexcept { return parts_.empty(); }
  /// 0-based part access; zero past the length.
  [[nodiscard]] int operator[](std::size_t i) const noexcept {
    return i < parts_.size() ? parts_[i] : 0;
  }
  /// Containment of Young diagrams.
  [[nodiscard]] bool contains(const Partition& other) const noexcept;

  friend bool operator==(const Partition& a, const Partition& b) noexcept { return a.parts_ == b.parts_; }
  friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) noexcept {
    return a.parts_ <=> b.parts_;
  }

  template <typename H>
  friend H AbslHashValue(H h, const Partition& p) {
    return H::combine(std::move(h), p.parts_);
  }

 private:
  std::vector<int> parts_;
  int boxes_ = 0;
};

/// "2,1"; the empty partition prints as "0".
std::string to_string(const Partition& p);
/// Accepts "2,1", "2 1", "(2,1)", and "0" or "" for the empty partition.
Partition parse_partition(std::string_view text);

bool in_box(const Partition& p, int k, int n);
/// Throws DomainError naming the partition when it is not in P_kn.
void require_in_box(const Partition& p, int k, int n);
/// All of P_kn, ordered by size, then lexicographically.
std::vector<Partition> partitions_in_box(int k, int n);
/// All partitions with at most k rows and exactly m boxes.
std::vector<Partition> partitions_of(int m, int k);

/// Partitions in P_kN obtained by adding one box, in decreasing lex order.
std::vector<Partition> covers(const Partition& p, int k, int N);
/// Partitions obtained by removing one box.
std::vector<Partition> lower_covers(const Partition& p);

/// b_i = p_i + k - i for i = 1..k (strictly decreasing). Requires length <= k.
std::vector<int> beta_numbers(const Partition& p, int k);
/// U(p): p_{k-j+1} + j for j = 1..k, ascending.
std::vector<int> upward_steps(const Partition& p, int k, int n);
/// Diagonal Pieri coefficient: sum over U(p) of t_i minus t_1 - ... - t_k.
TPoly equiv_weight(const Partition& p, int k, int n);

struct RimHookReduction {
  Partition core;
  int d = 0;
  std::vector<int> heights;
  int sign = 1;

  friend bool operator==(const RimHookReduction&, const RimHookReduction&) = default;
};

/// Strips n-rim hooks until none is removable, always taking the largest
/// movable beta-number. Never fails; the core can lie outside the box.
RimHookReduction strip_rim_hooks(const Partition& gamma, int n, int k);
/// As strip_rim_hooks, but empty when the core is not in P_kn.
std::optional<RimHookReduction> rim_hook_reduce(const Partition& gamma, int n, int k);

/// (n-k+1, p_2, ..., p_k). Requires p in P_kn with p_1 = n-k.
Partition bar(const Partition& p, int k, int n);
/// (p_2-1, ..., p_k-1) when p_1 = n-k and p_k >= 1.
std::optional<Partition> lambda_minus(const Partition& p, int k, int n);
/// Inverse of lambda_minus: (n-k, p_1+1, ..., p_{k-1}+1) when p_k = 0.
std::optional<Partition> nu_plus(const Partition& p, int k, int n);

}  // namespace eqrim
