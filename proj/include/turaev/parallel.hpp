#pragma once

// Bounded worker pool over independent items; results come back in input order.

#include <algorithm>
#include <atomic>
#include <exception>
#include <functional>
#include <thread>
#include <vector>

namespace turaev {

// Runs fn(i) for i in [0, count) on at most `jobs` threads. The first exception
// thrown by any item is rethrown after all workers stop.
template <typename R>
std::vector<R> parallel_map(int count, int jobs, const std::function<R(int)>& fn) {
  std::vector<R> out(count);
  std::atomic<int> next{0};
  std::exception_ptr error;
  std::atomic<bool> failed{false};
  auto worker = [&] {
    for (int i = next++; i < count && !failed; i = next++) {
      try {
        out[i] = fn(i);
      } catch (...) {
        if (!failed.exchange(true)) error = std::current_exception();
      }
    }
  };
  const int threads = std::clamp(jobs, 1, std::max(count, 1));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  if (error) std::rethrow_exception(error);
  return out;
}

}  // namespace turaev
