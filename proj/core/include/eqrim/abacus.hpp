#pragma once

// Abacus diagrams: a bead at every integer below some threshold plus finitely
// many beads above it, read on n runners (position p sits on runner p mod n).

#include <string>
#include <utility>
#include <vector>

#include "eqrim/partition.hpp"

namespace eqrim {

class Abacus {
 public:
  /// Beads at every integer < floor plus the listed positions. Normalizes by
  /// absorbing listed beads that extend the solid part.
  Abacus(int runners, int active, int floor, std::vector<int> beads);

  [[nodiscard]] int runners() const noexcept { return runners_; }
  [[nodiscard]] int active_count() const noexcept { return active_; }
  /// Every integer below this is beaded; floor() itself is not.
  [[nodiscard]] int floor() const noexcept { return floor_; }
  /// Beaded positions >= floor(), ascending.
  [[nodiscard]] const std::vector<int>& beads_above_floor() const noexcept { return beads_; }
  [[nodiscard]] bool beaded(int position) const noexcept;
  /// The active_count() largest beads, descending.
  [[nodiscard]] std::vector<int> active_beads() const;
  [[nodiscard]] int runner_of(int position) const noexcept;

  friend bool operator==(const Abacus&, const Abacus&) = default;

 private:
  int runners_;
  int active_;
  int floor_;
  std::vector<int> beads_;
};

/// Beads at the beta-numbers of p and at every negative integer.
Abacus abacus_from_partition(const Partition& p, int k, int runners);
/// Part i is the number of gaps below the i-th largest bead. InputError when
/// a bead below the active ones has a gap beneath it.
Partition abacus_to_partition(const Abacus& a);

/// Every bead has a bead directly above it (one row up on its runner).
bool is_flush(const Abacus& a);
/// Slides every runner's beads up as far as they go. Returns the flush abacus
/// and the total number of single-row moves.
std::pair<Abacus, int> make_flush(const Abacus& a);
/// Abacus of nu with the active beads in row 0 and the last one at n-1.
/// Requires nu in P_kn.
Abacus canonical_abacus(const Partition& nu, int k, int n);
/// Translates every bead by s positions.
Abacus shift(const Abacus& a, int s);

/// Rows of n positions; beaded ones in parentheses, active ones in brackets.
std::string render(const Abacus& a);

}  // namespace eqrim
