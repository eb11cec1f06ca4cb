#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace cyclift {

// Worker count used by enumeration and search; defaults to the hardware
// concurrency. Results never depend on it.
unsigned thread_count();
void set_thread_count(unsigned n);

// Runs body(t) for t in [0, tasks) on up to thread_count() workers. Tasks
// are claimed in increasing order; callers write into per-task slots and
// reduce in task order afterwards. The first exception thrown by any task
// is rethrown after all workers finish.
template <class Body>
void parallel_tasks(std::size_t tasks, Body&& body) {
  const std::size_t workers = std::min<std::size_t>(thread_count(), tasks);
  if (workers <= 1) {
    for (std::size_t t = 0; t < tasks; ++t) body(t);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto run = [&] {
    for (std::size_t t = next.fetch_add(1); t < tasks; t = next.fetch_add(1)) {
      try {
        body(t);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
        next.store(tasks);
      }
    }
  };
  std::vector<std::jthread> pool;
  for (std::size_t w = 1; w < workers; ++w) pool.emplace_back(run);
  run();
  pool.clear();
  if (error) std::rethrow_exception(error);
}

}  // namespace cyclift
