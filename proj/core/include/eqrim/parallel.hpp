#pragma once

// A small fork-join helper. Results are always indexed by case number, so
// output does not depend on scheduling.

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

namespace eqrim {

/// Environment variable that forces one worker regardless of --jobs.
inline constexpr const char* kSingleThreadEnv = "EQRIM_SINGLE_THREAD";

/// 1 if the single-thread variable is set to anything but "" or "0";
/// otherwise requested, with 0 meaning the hardware concurrency.
int effective_jobs(int requested);

/// Runs body(i) for i in [0, count) on up to jobs threads. The first
/// exception thrown (lowest index) is rethrown after all workers stop.
void parallel_for(std::size_t count, int jobs, const std::function<void(std::size_t)>& body);

template <typename T, typename F>
std::vector<T> parallel_map(std::size_t count, int jobs, F&& f) {
  std::vector<std::optional<T>> slots(count);
  parallel_for(count, jobs, [&](std::size_t i) { slots[i].emplace(f(i)); });
  std::vector<T> out;
  out.reserve(count);
  for (auto& s : slots) out.push_back(std::move(*s));
  return out;
}

}  // namespace eqrim
