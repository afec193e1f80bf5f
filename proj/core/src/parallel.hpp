#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <cstdio>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace zeno::detail {

// Runs fn(i) for i in [0, n) on up to `threads` workers. Work is handed out
// through a shared counter; callers write results by index.
template <typename Fn>
void parallel_for(std::size_t n, std::size_t threads, bool progress, const char* label, Fn&& fn) {
  std::atomic<std::size_t> next{0};
  std::atomic<std::size_t> done{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::mutex progress_mutex;

  auto worker = [&]() {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= n) return;
      try {
        fn(i);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next.store(n);
        return;
      }
      const std::size_t finished = done.fetch_add(1) + 1;
      if (progress && (finished == n || finished % std::max<std::size_t>(1, n / 20) == 0)) {
        std::lock_guard lock(progress_mutex);
        std::fprintf(stderr, "%s: %zu/%zu\n", label, finished, n);
      }
    }
  };

  const std::size_t workers = std::clamp<std::size_t>(threads, 1, std::max<std::size_t>(n, 1));
  if (workers == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);
}

}  // namespace zeno::detail
