#pragma once

#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace knitweave::detail {

/// Runs fn(worker, index) for index in [0, count) on up to `workers` threads,
/// striding indices by worker. The first exception thrown is rethrown.
template <typename Fn>
void parallel_for(int count, int workers, Fn&& fn) {
  if (workers < 1) workers = 1;
  if (workers > count) workers = count;
  if (workers <= 1) {
    for (int i = 0; i < count; ++i) fn(0, i);
    return;
  }
  std::exception_ptr error;
  std::mutex error_mutex;
  std::vector<std::thread> threads;
  threads.reserve(workers);
  for (int w = 0; w < workers; ++w) {
    threads.emplace_back([&, w] {
      try {
        for (int i = w; i < count; i += workers) fn(w, i);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
      }
    });
  }
  for (auto& t : threads) t.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace knitweave::detail
