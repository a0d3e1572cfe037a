#pragma once

#include <algorithm>
#include <cstdint>
#include <thread>
#include <vector>

namespace cordial::detail {

/// Splits [0, count) into `jobs` contiguous chunks, runs fn(begin, end) on
/// each, and concatenates the per-chunk vectors in chunk order.
template <typename T, typename Fn>
std::vector<T> parallel_collect(std::uint64_t count, unsigned jobs, Fn fn) {
  jobs = std::max(1u, jobs);
  if (jobs == 1 || count < 2 * static_cast<std::uint64_t>(jobs)) return fn(std::uint64_t{0}, count);
  std::vector<std::vector<T>> parts(jobs);
  std::vector<std::thread> workers;
  workers.reserve(jobs);
  const std::uint64_t step = count / jobs;
  for (unsigned w = 0; w < jobs; ++w) {
    const std::uint64_t lo = w * step;
    const std::uint64_t hi = (w + 1 == jobs) ? count : lo + step;
    workers.emplace_back([&parts, &fn, w, lo, hi] { parts[w] = fn(lo, hi); });
  }
  for (auto& t : workers) t.join();
  std::vector<T> out;
  for (auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  return out;
}

}  // namespace cordial::detail
