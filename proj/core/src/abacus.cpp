#include "eqrim/abacus.hpp"

#include <algorithm>
#include <map>

#include "eqrim/error.hpp"

namespace eqrim {

Abacus::Abacus(int runners, int active, int floor, std::vector<int> beads)
    : runners_(runners), active_(active), floor_(floor), beads_(std::move(beads)) {
  if (runners_ < 1) throw InputError("an abacus needs at least one runner");
  if (active_ < 0) throw InputError("negative active bead count");
  std::sort(beads_.begin(), beads_.end());
  beads_.erase(std::unique(beads_.begin(), beads_.end()), beads_.end());
  beads_.erase(beads_.begin(), std::lower_bound(beads_.begin(), beads_.end(), floor_));
  std::size_t absorbed = 0;
  while (absorbed < beads_.size() && beads_[absorbed] == floor_) {
    ++floor_;
    ++absorbed;
  }
  beads_.erase(beads_.begin(), beads_.begin() + static_cast<std::ptrdiff_t>(absorbed));
}

bool Abacus::beaded(int position) const noexcept {
  return position < floor_ || std::binary_search(beads_.begin(), beads_.end(), position);
}

std::vector<int> Abacus::active_beads() const {
  std::vector<int> out;
  for (auto it = beads_.rbegin(); it != beads_.rend() && static_cast<int>(out.size()) < active_; ++it) {
    out.push_back(*it);
  }
  for (int p = floor_ - 1; static_cast<int>(out.size()) < active_; --p) out.push_back(p);
  return out;
}

int Abacus::runner_of(int position) const noexcept {
  int r = position % runners_;
  return r < 0 ? r + runners_ : r;
}

Abacus abacus_from_partition(const Partition& p, int k, int runners) {
  return Abacus(runners, k, 0, beta_numbers(p, k));
}

Partition abacus_to_partition(const Abacus& a) {
  // Beads above the floor that are not active each have a gap below them.
  if (static_cast<int>(a.beads_above_floor().size()) > a.active_count()) {
    throw InputError("malformed abacus: an inactive bead has a gap below it");
  }
  std::vector<int> active = a.active_beads();
  const auto& above = a.beads_above_floor();
  std::vector<int> parts;
  for (int b : active) {
    // positions in [floor, b) minus beads among them
    auto beads_below = std::lower_bound(above.begin(), above.end(), b) - above.begin();
    int gaps = std::max(0, b - a.floor()) - static_cast<int>(beads_below);
    parts.push_back(gaps);
  }
  return Partition(std::move(parts));
}

bool is_flush(const Abacus& a) {
  return std::all_of(a.beads_above_floor().begin(), a.beads_above_floor().end(),
                     [&a](int p) { return a.beaded(p - a.runners()); });
}

std::pair<Abacus, int> make_flush(const Abacus& a) {
  const int n = a.runners();
  // Per runner: how many beads sit at or above the floor, and their rows.
  std::map<int, std::vector<int>> by_runner;
  for (int p : a.beads_above_floor()) by_runner[a.runner_of(p)].push_back(p);
  std::vector<int> beads;
  int moves = 0;
  for (auto& [r, positions] : by_runner) {
    // lowest unbeaded position on runner r
    int slot = a.floor() + ((r - a.runner_of(a.floor())) % n + n) % n;
    for (int p : positions) {  // ascending
      moves += (p - slot) / n;
      beads.push_back(slot);
      slot += n;
    }
  }
  return {Abacus(n, a.active_count(), a.floor(), std::move(beads)), moves};
}

Abacus canonical_abacus(const Partition& nu, int k, int n) {
  require_in_box(nu, k, n);
  Abacus a = shift(abacus_from_partition(nu, k, n), n - k - nu[0]);
  std::vector<int> active = a.active_beads();
  for (int i = 1; i <= k; ++i) {
    int expected = n - 1 - (nu[0] - nu[static_cast<std::size_t>(i - 1)]) - (i - 1);
    if (active[static_cast<std::size_t>(i - 1)] != expected) {
      throw InvariantError("canonical abacus construction misplaced an active bead");
    }
  }
  return a;
}

Abacus shift(const Abacus& a, int s) {
  std::vector<int> beads = a.beads_above_floor();
  for (int& b : beads) b += s;
  return Abacus(a.runners(), a.active_count(), a.floor() + s, std::move(beads));
}

std::string render(const Abacus& a) {
  const int n = a.runners();
  std::vector<int> active = a.active_beads();
  int top = active.empty() ? a.floor() : std::max(active.front(), a.floor());
  int lo = std::min(a.floor(), active.empty() ? a.floor() : active.back()) - n;
  int first_row = lo >= 0 ? lo / n : -((-lo + n - 1) / n);
  int last_row = top >= 0 ? top / n : -((-top + n - 1) / n);
  std::size_t width = std::max(std::to_string(first_row * n).size(), std::to_string(last_row * n + n - 1).size()) + 2;
  std::string out;
  for (int row = first_row; row <= last_row; ++row) {
    for (int c = 0; c < n; ++c) {
      int p = row * n + c;
      std::string cell = std::to_string(p);
      if (std::find(active.begin(), active.end(), p) != active.end()) {
        cell = "[" + cell + "]";
      } else if (a.beaded(p)) {
        cell = "(" + cell + ")";
      } else {
        cell = " " + cell + " ";
      }
      out += std::string(width - cell.size() + 1, ' ') + cell;
    }
    out += "\n";
  }
  return out;
}

}  // namespace eqrim
