#pragma once

#include <algorithm>
#include <cstddef>
#include <thread>
#include <vector>

namespace hquat {

inline int default_thread_count() {
  unsigned hc = std::thread::hardware_concurrency();
  return hc == 0 ? 1 : static_cast<int>(hc);
}

/// Runs fn(lo, hi, worker) over contiguous chunks of [begin, end).
/// Chunk boundaries depend only on the range and the thread count, and
/// workers must write disjoint state, so results are order-independent.
template <typename Fn>
void parallel_chunks(std::size_t begin, std::size_t end, int threads, Fn&& fn) {
  std::size_t total = end > begin ? end - begin : 0;
  if (total == 0) return;
  std::size_t workers = threads < 1 ? 1 : static_cast<std::size_t>(threads);
  workers = std::min(workers, total);
  if (workers == 1) {
    fn(begin, end, 0);
    return;
  }
  std::size_t chunk = (total + workers - 1) / workers;
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t t = 0; t < workers; ++t) {
    std::size_t lo = begin + t * chunk;
    std::size_t hi = std::min(end, lo + chunk);
    if (lo >= hi) break;
    pool.emplace_back([lo, hi, t, &fn] { fn(lo, hi, static_cast<int>(t)); });
  }
  for (auto& th : pool) th.join();
}

}  // namespace hquat
