#pragma once

#include <atomic>
#include <exception>
#include <thread>
#include <vector>

namespace uc {

/// Runs f(0..n-1), fanning out to at most `workers` threads. Each index owns
/// its output slot, so results merge deterministically regardless of schedule.
/// The first exception thrown by any task is rethrown on the caller.
template <typename F>
void parallel_for(int n, int workers, F&& f) {
  if (n <= 0) return;
  if (workers <= 1 || n == 1) {
    for (int i = 0; i < n; ++i) f(i);
    return;
  }
  int n_threads = std::min(workers, n);
  std::atomic<int> next{0};
  std::exception_ptr error;
  std::mutex err_mutex;
  auto body = [&]() {
    while (true) {
      int i = next.fetch_add(1);
      if (i >= n) return;
      try {
        f(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(err_mutex);
        if (!error) error = std::current_exception();
        return;
      }
    }
  };
  std::vector<std::thread> threads;
  threads.reserve(n_threads);
  for (int k = 0; k < n_threads; ++k) threads.emplace_back(body);
  for (auto& t : threads) t.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace uc
