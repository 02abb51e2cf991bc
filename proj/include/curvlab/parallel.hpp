#pragma once

#include <atomic>
#include <cstdlib>
#include <functional>
#include <thread>
#include <vector>

namespace curvlab {

/// Worker count: CURVLAB_THREADS if set (clamped to [1,256]), else hardware.
inline int thread_count() {
  if (const char* env = std::getenv("CURVLAB_THREADS")) {
    int n = std::atoi(env);
    if (n >= 1) return n < 256 ? n : 256;
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw ? static_cast<int>(hw) : 1;
}

/// Runs fn(i) for i in [0,count). Work items must be independent; results
/// must not depend on scheduling (callers seed per-item substreams).
inline void parallel_for(std::size_t count, const std::function<void(std::size_t)>& fn) {
  int workers = thread_count();
  if (workers <= 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> cursor{0};
  auto run = [&] {
    for (;;) {
      std::size_t i = cursor.fetch_add(1);
      if (i >= count) return;
      fn(i);
    }
  };
  std::vector<std::thread> pool;
  int n = workers < static_cast<int>(count) ? workers : static_cast<int>(count);
  pool.reserve(n);
  for (int t = 0; t < n; ++t) pool.emplace_back(run);
  for (auto& th : pool) th.join();
}

}  // namespace curvlab
