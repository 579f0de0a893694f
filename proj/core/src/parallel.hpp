#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace eemd::detail {

inline unsigned resolve_workers(unsigned requested, std::size_t tasks) {
  unsigned workers = requested;
  if (workers == 0) {
    workers = std::max(1u, std::thread::hardware_concurrency());
  }
  if (tasks < workers) workers = static_cast<unsigned>(std::max<std::size_t>(1, tasks));
  return workers;
}

/// Runs task(index, worker) for every index in [0, tasks). Indices are
/// handed out dynamically; `worker` is in [0, workers) and identifies the
/// calling thread's private scratch. The first exception thrown by any
/// task is rethrown after all threads have joined.
template <typename Task>
void parallel_for(std::size_t tasks, unsigned workers, Task&& task) {
  if (workers <= 1) {
    for (std::size_t i = 0; i < tasks; ++i) task(i, 0u);
    return;
  }

  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto body = [&](unsigned worker) {
    for (;;) {
      const std::size_t i = next.fetch_add(1, std::memory_order_relaxed);
      if (i >= tasks) return;
      try {
        task(i, worker);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
        next.store(tasks, std::memory_order_relaxed);
        return;
      }
    }
  };

  {
    std::vector<std::jthread> pool;
    pool.reserve(workers - 1);
    for (unsigned w = 1; w < workers; ++w) pool.emplace_back(body, w);
    body(0);
  }
  if (error) std::rethrow_exception(error);
}

}  // namespace eemd::detail
