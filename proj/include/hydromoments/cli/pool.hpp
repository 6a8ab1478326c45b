#pragma once

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <thread>
#include <type_traits>
#include <vector>

namespace hydromoments::cli {

/// Worker count: HYDROMOMENTS_THREADS when set to a positive integer, else the
/// hardware concurrency.
inline unsigned worker_count() {
  if (const char* env = std::getenv("HYDROMOMENTS_THREADS")) {
    const int n = std::atoi(env);
    if (n > 0) return static_cast<unsigned>(n);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

/// Evaluates f(0), ..., f(count-1) on `threads` workers. Results come back in
/// index order whatever the scheduling; the first exception thrown is rethrown.
template <class F>
auto parallel_map(size_t count, F&& f, unsigned threads) {
  using R = std::invoke_result_t<F&, size_t>;
  std::vector<R> results(count);
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(std::max<size_t>(count, 1))));
  if (threads == 1) {
    for (size_t i = 0; i < count; ++i) results[i] = f(i);
    return results;
  }
  std::atomic<size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  {
    std::vector<std::jthread> workers;
    for (unsigned t = 0; t < threads; ++t) {
      workers.emplace_back([&] {
        for (size_t i = next++; i < count; i = next++) {
          try {
            results[i] = f(i);
          } catch (...) {
            std::lock_guard lock(failure_mutex);
            if (!failure) failure = std::current_exception();
          }
        }
      });
    }
  }
  if (failure) std::rethrow_exception(failure);
  return results;
}

}  // namespace hydromoments::cli
