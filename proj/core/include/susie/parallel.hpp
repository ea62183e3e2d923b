#pragma once

#include <atomic>
#include <cstddef>
#include <exception>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

namespace susie {

// Runs fn(ctx, i) for i in [0, n) across `workers` threads. Each worker
// gets its own context from make_ctx (summarizer handles are confined to
// one worker this way). Results land at their input index, so output order
// is independent of scheduling. The first exception thrown by make_ctx or
// fn is rethrown after all workers drain. An optional stop flag abandons
// not-yet-started items.
template <class Result, class MakeCtx, class Fn>
std::vector<Result> parallel_map(std::size_t n, unsigned workers, MakeCtx make_ctx,
                                 Fn fn, const std::atomic<bool>* stop = nullptr) {
  std::vector<Result> results(n);
  if (n == 0) return results;
  if (workers < 1) workers = 1;
  if (workers > n) workers = static_cast<unsigned>(n);

  std::atomic<std::size_t> next{0};
  std::atomic<bool> failed{false};
  std::exception_ptr error;
  std::mutex error_mutex;

  auto body = [&]() {
    try {
      auto ctx = make_ctx();
      for (;;) {
        if (failed.load() || (stop && stop->load())) return;
        const std::size_t i = next.fetch_add(1);
        if (i >= n) return;
        results[i] = fn(ctx, i);
      }
    } catch (...) {
      std::lock_guard<std::mutex> lock(error_mutex);
      if (!error) error = std::current_exception();
      failed.store(true);
    }
  };

  if (workers == 1) {
    body();
  } else {
    std::vector<std::thread> threads;
    threads.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) threads.emplace_back(body);
    for (auto& t : threads) t.join();
  }
  if (error) std::rethrow_exception(error);
  return results;
}

}  // namespace susie
