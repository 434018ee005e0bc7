#pragma once

// Equivariant Littlewood-Richardson coefficients of H_T^*(Gr(k,N)).

#include <cstddef>
#include <filesystem>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "eqrim/partition.hpp"
#include "eqrim/tpoly.hpp"

namespace eqrim {

struct ClassicalExpansion {
  int k = 0;
  int N = 0;
  std::map<Partition, TPoly> terms;

  [[nodiscard]] const TPoly& coefficient(const Partition& p) const;
  friend bool operator==(const ClassicalExpansion&, const ClassicalExpansion&) = default;
};

void to_json(nlohmann::json& j, const ClassicalExpansion& e);
void from_json(const nlohmann::json& j, ClassicalExpansion& e);
/// "1*s[2,2] + (t4 - t3)*s[2,1] + ..." in decreasing label order.
std::string to_string(const ClassicalExpansion& e);

/// Thread-safe store of expansions keyed by (k, N, lhs, rhs). With a file
/// it also appends every new entry as one JSON line carrying an FNV-1a hash;
/// lines whose hash does not match are skipped and reported by warnings().
class ExpansionCache {
 public:
  ExpansionCache();
  explicit ExpansionCache(const std::filesystem::path& file);
  ~ExpansionCache();
  ExpansionCache(const ExpansionCache&) = delete;
  ExpansionCache& operator=(const ExpansionCache&) = delete;

  std::optional<ClassicalExpansion> find(const Partition& lhs, const Partition& rhs, int k, int N) const;
  void store(const Partition& lhs, const Partition& rhs, const ClassicalExpansion& e);
  [[nodiscard]] std::size_t size() const;
  [[nodiscard]] std::vector<std::string> warnings() const;

  /// The line format written to the cache file (without a newline).
  static std::string encode_line(const Partition& lhs, const Partition& rhs, const ClassicalExpansion& e);

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

/// 64-bit FNV-1a, rendered as 16 lowercase hex digits.
std::string fnv1a_hex(std::string_view data);

enum class Truncation {
  /// Drop labels outside P_kN (the product in H_T^*(Gr(k,N))).
  kDrop,
  /// A label outside P_kN is an InvariantError.
  kForbid,
};

/// Expansion of s_lhs(x|t) * s_rhs(x|t) in factorial Schur polynomials,
/// restricted to P_kN. Both factors must lie in P_kN (DomainError).
ClassicalExpansion classical_eqlr(const Partition& lhs, const Partition& rhs, int k, int N,
                                  ExpansionCache* cache = nullptr, Truncation truncation = Truncation::kDrop);

/// Equivariant Pieri rule: covers with coefficient 1 plus the diagonal term.
ClassicalExpansion classical_pieri(const Partition& p, int k, int N);

}  // namespace eqrim
