#pragma once

#include <exception>
#include <thread>
#include <vector>

namespace rmt {

// Runs fn(i) for i in [0, n) on `threads` workers. Callers write results into
// per-index slots and reduce in index order afterwards, so aggregates do not
// depend on the thread count.
template <typename F>
void parallel_for_index(int n, int threads, F&& fn) {
  if (threads < 1) threads = 1;
  if (threads == 1 || n <= 1) {
    for (int i = 0; i < n; ++i) fn(i);
    return;
  }
  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> errors(threads);
  for (int t = 0; t < threads; ++t) {
    pool.emplace_back([&, t]() {
      try {
        for (int i = t; i < n; i += threads) fn(i);
      } catch (...) {
        errors[t] = std::current_exception();
      }
    });
  }
  for (auto& th : pool) th.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

inline int default_threads() {
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

}  // namespace rmt
