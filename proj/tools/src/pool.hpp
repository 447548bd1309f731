#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace kerrqc::cli {

inline unsigned resolve_threads(unsigned requested) {
  if (requested != 0) return requested;
  return std::max(1u, std::thread::hardware_concurrency());
}

/// out[i] = fn(i) for i in [0, n), spread over `threads` workers. Results
/// come back in index order whatever the scheduling. If any call throws, the
/// exception of the lowest failing index is rethrown after all workers stop.
template <typename T, typename F>
std::vector<T> parallel_map(std::size_t n, unsigned threads, F fn) {
  std::vector<T> out(n);
  std::vector<std::exception_ptr> errors(n);
  std::atomic<std::size_t> next{0};
  std::atomic<std::size_t> first_failure{n};
  auto worker = [&] {
    for (std::size_t i = next++; i < n; i = next++) {
      // Work above a known failure is skipped; work below it still runs so
      // the lowest failing index is the one reported.
      if (i > first_failure.load()) continue;
      try {
        out[i] = fn(i);
      } catch (...) {
        errors[i] = std::current_exception();
        std::size_t cur = first_failure.load();
        while (i < cur && !first_failure.compare_exchange_weak(cur, i)) {
        }
      }
    }
  };
  const unsigned t = std::min<std::size_t>(resolve_threads(threads), std::max<std::size_t>(n, 1));
  if (t <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned k = 0; k < t; ++k) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return out;
}

}  // namespace kerrqc::cli
