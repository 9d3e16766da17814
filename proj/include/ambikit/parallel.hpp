// Chunked parallel loop over [0, n).  Work is split into contiguous index
// ranges so results can be written into preallocated slots and stay
// deterministic regardless of thread count.

#pragma once

#include <algorithm>
#include <thread>
#include <vector>

namespace ambikit {

template <class F>
void parallel_chunks(long n, F&& body) {
  if (n <= 0) return;
  unsigned hw = std::thread::hardware_concurrency();
  long workers = std::clamp<long>(static_cast<long>(hw ? hw : 1), 1, n);
  if (workers == 1) {
    body(0L, n);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(static_cast<size_t>(workers));
  long chunk = (n + workers - 1) / workers;
  for (long w = 0; w < workers; ++w) {
    long lo = w * chunk, hi = std::min(n, lo + chunk);
    if (lo >= hi) break;
    pool.emplace_back([&body, lo, hi] { body(lo, hi); });
  }
  for (auto& t : pool) t.join();
}

}  // namespace ambikit
