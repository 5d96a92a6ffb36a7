#pragma once

#include <algorithm>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace resdil {

/// Evaluates fn(i) for i in [0, count) on up to `workers` threads and returns
/// the results in index order. workers == 0 means hardware concurrency. The
/// first exception (by index) is rethrown after all threads have joined.
template <class Fn>
auto parallel_map(std::size_t count, Fn fn, std::size_t workers = 0)
    -> std::vector<decltype(fn(std::size_t{}))> {
  using Result = decltype(fn(std::size_t{}));
  std::vector<Result> results(count);
  if (workers == 0) workers = std::max(1U, std::thread::hardware_concurrency());
  workers = std::min(workers, std::max<std::size_t>(count, 1));

  std::vector<std::exception_ptr> errors(count);
  const auto run_stride = [&](std::size_t first) {
    for (std::size_t i = first; i < count; i += workers) {
      try {
        results[i] = fn(i);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  if (workers <= 1) {
    run_stride(0);
  } else {
    std::vector<std::jthread> threads;
    threads.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) threads.emplace_back(run_stride, w);
  }
  for (const std::exception_ptr& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return results;
}

}  // namespace resdil
