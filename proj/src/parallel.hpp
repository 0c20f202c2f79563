#ifndef EULERGAMMA_PARALLEL_HPP
#define EULERGAMMA_PARALLEL_HPP

#include <mpfr.h>

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace eulergamma::detail {

/// Worker count: THREADS if set and positive, else hardware concurrency.
inline unsigned worker_count() {
  if (const char* env = std::getenv("THREADS")) {
    const long n = std::strtol(env, nullptr, 10);
    if (n > 0) return static_cast<unsigned>(n);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

/// Calls fn(i) for i in [0, count) on up to worker_count() threads. Each
/// index is visited exactly once; results must be written to per-index slots.
template <typename Fn>
void parallel_for(long count, Fn&& fn) {
  const long workers = std::min<long>(count, worker_count());
  if (workers <= 1) {
    for (long i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<long> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto run = [&] {
    for (long i = next++; i < count; i = next++) {
      try {
        fn(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!error) error = std::current_exception();
      }
    }
  };
  std::vector<std::thread> threads;
  threads.reserve(static_cast<std::size_t>(workers - 1));
  for (long t = 1; t < workers; ++t) {
    threads.emplace_back([&run] {
      run();
      mpfr_free_cache();
    });
  }
  run();
  for (auto& th : threads) th.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace eulergamma::detail

#endif  // EULERGAMMA_PARALLEL_HPP
