#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

namespace rbfcub {

/// Runs body(i) for i in [0,n) on a small thread pool. Callers write results
/// into preallocated slots indexed by i, so output ordering is deterministic
/// regardless of scheduling. The first exception thrown by any worker is
/// rethrown on the calling thread.
inline void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body,
                         unsigned num_threads = 0) {
  if (n == 0) {
    return;
  }
  unsigned hw = num_threads ? num_threads : std::thread::hardware_concurrency();
  if (hw == 0) {
    hw = 1;
  }
  const unsigned workers = static_cast<unsigned>(std::min<std::size_t>(hw, n));
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) {
      body(i);
    }
    return;
  }
  std::atomic<std::size_t> next{0};
  std::atomic<bool> failed{false};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto work = [&] {
    while (!failed.load(std::memory_order_relaxed)) {
      const std::size_t i = next.fetch_add(1, std::memory_order_relaxed);
      if (i >= n) {
        return;
      }
      try {
        body(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!error) {
          error = std::current_exception();
        }
        failed.store(true, std::memory_order_relaxed);
        return;
      }
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned t = 0; t < workers; ++t) {
    pool.emplace_back(work);
  }
  for (auto& th : pool) {
    th.join();
  }
  if (error) {
    std::rethrow_exception(error);
  }
}

}  // namespace rbfcub
