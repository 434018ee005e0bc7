#include "eqrim/partition.hpp"

#include <algorithm>
#include <charconv>
#include <functional>

#include "eqrim/error.hpp"

namespace eqrim {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 0) throw InputError("partition has a negative part");
    if (i > 0 && parts_[i] > parts_[i - 1]) throw InputError("partition parts must be weakly decreasing");
    boxes_ += parts_[i];
  }
}

bool Partition::contains(const Partition& other) const noexcept {
  if (other.length() > length()) return false;
  for (std::size_t i = 0; i < other.parts_.size(); ++i) {
    if (other.parts_[i] > parts_[i]) return false;
  }
  return true;
}

std::string to_string(const Partition& p) {
  if (p.empty()) return "0";
  std::string out;
  for (int part : p.parts()) {
    if (!out.empty()) out += ",";
    out += std::to_string(part);
  }
  return out;
}

Partition parse_partition(std::string_view text) {
  std::string_view s = text;
  auto trim = [](std::string_view v) {
    while (!v.empty() && (v.front() == ' ' || v.front() == '\t')) v.remove_prefix(1);
    while (!v.empty() && (v.back() == ' ' || v.back() == '\t')) v.remove_suffix(1);
    return v;
  };
  s = trim(s);
  if (s.size() >= 2 && s.front() == '(' && s.back() == ')') s = trim(s.substr(1, s.size() - 2));
  std::vector<int> parts;
  while (!s.empty()) {
    std::size_t cut = s.find_first_of(", ");
    std::string_view tok = trim(s.substr(0, cut));
    s = cut == std::string_view::npos ? std::string_view{} : trim(s.substr(cut + 1));
    int v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (tok.empty() || ec != std::errc{} || ptr != tok.data() + tok.size()) {
      throw ParseError("cannot parse partition '" + std::string(text) + "'");
    }
    parts.push_back(v);
  }
  try {
    return Partition(std::move(parts));
  } catch (const InputError& e) {
    throw ParseError("cannot parse partition '" + std::string(text) + "': " + e.what());
  }
}

namespace {

void check_kn(int k, int n) {
  if (k < 0 || n < k) throw InputError("need 0 <= k <= n");
}

}  // namespace

bool in_box(const Partition& p, int k, int n) {
  check_kn(k, n);
  return p.length() <= k && p[0] <= n - k;
}

void require_in_box(const Partition& p, int k, int n) {
  if (!in_box(p, k, n)) {
    throw DomainError("partition " + to_string(p) + " does not fit in the " + std::to_string(k) + "x" +
                      std::to_string(n - k) + " box");
  }
}

std::vector<Partition> partitions_in_box(int k, int n) {
  check_kn(k, n);
  std::vector<Partition> out;
  std::vector<int> cur(static_cast<std::size_t>(k), 0);
  std::function<void(int, int)> rec = [&](int row, int cap) {
    if (row == k) {
      out.emplace_back(cur);
      return;
    }
    for (int v = 0; v <= cap; ++v) {
      cur[static_cast<std::size_t>(row)] = v;
      rec(row + 1, v);
    }
  };
  rec(0, n - k);
  std::sort(out.begin(), out.end(), [](const Partition& a, const Partition& b) {
    if (a.boxes() != b.boxes()) return a.boxes() < b.boxes();
    return a < b;
  });
  return out;
}

std::vector<Partition> partitions_of(int m, int k) {
  std::vector<Partition> out;
  if (m < 0 || k < 0) return out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int left, int cap) {
    if (left == 0) {
      out.emplace_back(cur);
      return;
    }
    if (static_cast<int>(cur.size()) == k) return;
    for (int v = std::min(left, cap); v >= 1; --v) {
      cur.push_back(v);
      rec(left - v, v);
      cur.pop_back();
    }
  };
  rec(m, m);
  return out;
}

std::vector<Partition> covers(const Partition& p, int k, int N) {
  check_kn(k, N);
  std::vector<Partition> out;
  std::vector<int> parts = p.parts();
  parts.resize(static_cast<std::size_t>(std::max(k, p.length())), 0);
  for (std::size_t i = 0; i < static_cast<std::size_t>(k); ++i) {
    if (parts[i] + 1 > N - k) continue;
    if (i > 0 && parts[i] + 1 > parts[i - 1]) continue;
    std::vector<int> next = parts;
    ++next[i];
    out.emplace_back(std::move(next));
  }
  std::sort(out.rbegin(), out.rend());
  return out;
}

std::vector<Partition> lower_covers(const Partition& p) {
  std::vector<Partition> out;
  const auto& parts = p.parts();
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i + 1 < parts.size() && parts[i] - 1 < parts[i + 1]) continue;
    std::vector<int> next = parts;
    --next[i];
    out.emplace_back(std::move(next));
  }
  std::sort(out.rbegin(), out.rend());
  return out;
}

std::vector<int> beta_numbers(const Partition& p, int k) {
  if (p.length() > k) throw InputError("partition " + to_string(p) + " has more than k rows");
  std::vector<int> beta(static_cast<std::size_t>(k));
  for (int i = 1; i <= k; ++i) beta[static_cast<std::size_t>(i - 1)] = p[static_cast<std::size_t>(i - 1)] + k - i;
  return beta;
}

std::vector<int> upward_steps(const Partition& p, int k, int n) {
  require_in_box(p, k, n);
  std::vector<int> u(static_cast<std::size_t>(k));
  for (int j = 1; j <= k; ++j) u[static_cast<std::size_t>(j - 1)] = p[static_cast<std::size_t>(k - j)] + j;
  return u;
}

TPoly equiv_weight(const Partition& p, int k, int n) {
  TPoly w;
  for (int i : upward_steps(p, k, n)) w += TPoly::variable(i);
  for (int j = 1; j <= k; ++j) w -= TPoly::variable(j);
  return w;
}

RimHookReduction strip_rim_hooks(const Partition& gamma, int n, int k) {
  if (n < 1) throw InputError("rim hook length must be positive");
  std::vector<int> beta = beta_numbers(gamma, k);  // strictly decreasing
  RimHookReduction r;
  auto occupied = [&beta](int v) { return std::find(beta.begin(), beta.end(), v) != beta.end(); };
  for (;;) {
    bool moved = false;
    for (std::size_t i = 0; i < beta.size(); ++i) {
      int target = beta[i] - n;
      if (target < 0 || occupied(target)) continue;
      int between = 0;
      for (int b : beta) between += (b > target && b < beta[i]) ? 1 : 0;
      int height = 1 + between;
      beta[i] = target;
      std::sort(beta.rbegin(), beta.rend());
      r.heights.push_back(height);
      if ((height - k) % 2 != 0) r.sign = -r.sign;
      ++r.d;
      moved = true;
      break;
    }
    if (!moved) break;
  }
  std::vector<int> parts(beta.size());
  for (std::size_t i = 0; i < beta.size(); ++i) parts[i] = beta[i] - (k - 1 - static_cast<int>(i));
  r.core = Partition(std::move(parts));
  return r;
}

std::optional<RimHookReduction> rim_hook_reduce(const Partition& gamma, int n, int k) {
  RimHookReduction r = strip_rim_hooks(gamma, n, k);
  if (!in_box(r.core, k, n)) return std::nullopt;
  return r;
}

Partition bar(const Partition& p, int k, int n) {
  require_in_box(p, k, n);
  if (k == 0 || p[0] != n - k) {
    throw DomainError("bar needs a first row of length n-k, got " + to_string(p));
  }
  std::vector<int> parts = p.parts();
  parts[0] = n - k + 1;
  return Partition(std::move(parts));
}

std::optional<Partition> lambda_minus(const Partition& p, int k, int n) {
  require_in_box(p, k, n);
  if (k == 0 || p[0] != n - k || p[static_cast<std::size_t>(k - 1)] < 1) return std::nullopt;
  std::vector<int> parts;
  for (int i = 1; i < k; ++i) parts.push_back(p[static_cast<std::size_t>(i)] - 1);
  return Partition(std::move(parts));
}

std::optional<Partition> nu_plus(const Partition& p, int k, int n) {
  require_in_box(p, k, n);
  if (k == 0 || n - k < 1 || p[static_cast<std::size_t>(k - 1)] != 0) return std::nullopt;
  if (k >= 2 && p[0] + 1 > n - k) return std::nullopt;
  std::vector<int> parts{n - k};
  for (int i = 0; i + 1 < k; ++i) parts.push_back(p[static_cast<std::size_t>(i)] + 1);
  return Partition(std::move(parts));
}

}  // namespace eqrim
