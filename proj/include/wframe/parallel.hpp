#pragma once

// Minimal deterministic work partitioning. Callers hand in a range and a
// body that owns disjoint output slots, so results are identical for any
// thread count. WFRAME_THREADS caps the number of workers.

#include <cstddef>
#include <thread>
#include <vector>

namespace wframe {

// Worker cap: WFRAME_THREADS if set (>= 1), otherwise hardware concurrency.
int worker_cap();

// Invokes fn(lo, hi) over a partition of [begin, end); chunks never get
// smaller than `grain`. fn must only touch state owned by its range.
template <typename F>
void parallel_for_ranges(std::size_t begin, std::size_t end, std::size_t grain, F&& fn) {
  const std::size_t total = end > begin ? end - begin : 0;
  if (total == 0) return;
  std::size_t workers = static_cast<std::size_t>(worker_cap());
  if (grain == 0) grain = 1;
  const std::size_t max_chunks = (total + grain - 1) / grain;
  if (workers > max_chunks) workers = max_chunks;
  if (workers <= 1) {
    fn(begin, end);
    return;
  }
  const std::size_t chunk = (total + workers - 1) / workers;
  std::vector<std::thread> threads;
  threads.reserve(workers - 1);
  std::size_t lo = begin;
  for (std::size_t w = 0; w + 1 < workers && lo + chunk < end; ++w) {
    threads.emplace_back([&fn, lo, chunk] { fn(lo, lo + chunk); });
    lo += chunk;
  }
  fn(lo, end);
  for (auto& t : threads) t.join();
}

}  // namespace wframe
