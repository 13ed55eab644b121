#ifndef CIA_PARALLEL_HPP
#define CIA_PARALLEL_HPP

#include <algorithm>
#include <cstddef>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

namespace cia {

/// Worker count: CIA_THREADS when set and positive, else the hardware
/// concurrency (at least one).
inline int worker_count() {
  if (const char* env = std::getenv("CIA_THREADS")) {
    int n = std::atoi(env);
    if (n > 0) return n;
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

/// Runs body(i) for i in [0, n). Indices are split into contiguous chunks,
/// one per worker; callers write results by index so the outcome does not
/// depend on the schedule. The first exception (lowest chunk) is rethrown.
template <class F>
void parallel_for(std::size_t n, F&& body, int workers = worker_count()) {
  if (n == 0) return;
  std::size_t w = std::min<std::size_t>(std::max(1, workers), n);
  if (w == 1) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
  std::vector<std::exception_ptr> errors(w);
  std::vector<std::thread> threads;
  threads.reserve(w);
  for (std::size_t t = 0; t < w; ++t) {
    std::size_t lo = n * t / w, hi = n * (t + 1) / w;
    threads.emplace_back([&, t, lo, hi] {
      try {
        for (std::size_t i = lo; i < hi; ++i) body(i);
      } catch (...) {
        errors[t] = std::current_exception();
      }
    });
  }
  for (auto& th : threads) th.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

}  // namespace cia

#endif  // CIA_PARALLEL_HPP
