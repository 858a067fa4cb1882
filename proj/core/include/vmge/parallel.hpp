#pragma once

#include <cstdint>
#include <exception>
#include <functional>
#include <thread>
#include <vector>

namespace vmge {

// Runs fn(i) for i in [0, n) across up to `threads` std::threads with static
// chunking.  Results must be written to caller-owned, index-addressed slots,
// which keeps every schedule bitwise-deterministic.  The first exception
// thrown by any chunk is rethrown on the calling thread.
inline void parallel_for(std::int64_t n, int threads,
                         const std::function<void(std::int64_t)>& fn) {
  if (n <= 0) return;
  if (threads < 1) threads = 1;
  const int workers = static_cast<int>(
      std::min<std::int64_t>(threads, n));
  if (workers == 1) {
    for (std::int64_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> errors(workers);
  const std::int64_t chunk = (n + workers - 1) / workers;
  for (int w = 0; w < workers; ++w) {
    const std::int64_t lo = w * chunk;
    const std::int64_t hi = std::min(n, lo + chunk);
    pool.emplace_back([&, w, lo, hi] {
      try {
        for (std::int64_t i = lo; i < hi; ++i) fn(i);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

}  // namespace vmge
