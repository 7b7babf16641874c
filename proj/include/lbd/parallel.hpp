#pragma once

#include <algorithm>
#include <cstddef>
#include <thread>
#include <vector>

namespace lbd {

inline unsigned resolve_threads(unsigned requested) {
  if (requested > 0) return requested;
  unsigned hw = std::thread::hardware_concurrency();
  return hw > 0 ? hw : 1;
}

// Splits [0, n) into contiguous chunks, one per worker, and runs
// fn(shard_index, begin, end) concurrently. Shard boundaries depend only on
// (n, threads), so per-shard results can be merged in shard order for
// thread-count-independent output.
template <typename Fn>
void parallel_chunks(std::size_t n, unsigned threads, Fn&& fn) {
  unsigned workers = std::max(1u, std::min<unsigned>(threads, n > 0 ? static_cast<unsigned>(n) : 1u));
  if (workers == 1) {
    fn(0u, std::size_t{0}, n);
    return;
  }
  std::size_t chunk = (n + workers - 1) / workers;
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    std::size_t begin = w * chunk;
    std::size_t end = std::min(n, begin + chunk);
    if (begin >= end) break;
    pool.emplace_back([&fn, w, begin, end] { fn(w, begin, end); });
  }
  for (auto& t : pool) t.join();
}

}  // namespace lbd
