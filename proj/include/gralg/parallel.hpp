#pragma once

#include <algorithm>
#include <cstdint>
#include <exception>
#include <thread>
#include <vector>

namespace gralg {

/// Worker count from GRALG_WORKERS, else the hardware concurrency (>= 1).
unsigned worker_count();

/// Splits [0, total) into contiguous chunks, runs work(begin, end) on each in
/// its own thread and returns the per-chunk results in chunk order, so any
/// fold over the result is deterministic regardless of scheduling.
template <typename Work>
auto run_partitioned(std::uint64_t total, Work&& work, unsigned workers = 0)
    -> std::vector<decltype(work(std::uint64_t{}, std::uint64_t{}))> {
  using Result = decltype(work(std::uint64_t{}, std::uint64_t{}));
  if (workers == 0) workers = worker_count();
  const std::uint64_t chunks = std::max<std::uint64_t>(1, std::min<std::uint64_t>(workers, total));
  std::vector<Result> results(chunks);
  if (chunks == 1) {
    results[0] = work(0, total);
    return results;
  }
  std::vector<std::exception_ptr> errors(chunks);
  {
    std::vector<std::jthread> threads;
    threads.reserve(chunks);
    for (std::uint64_t c = 0; c < chunks; ++c) {
      const std::uint64_t begin = total * c / chunks;
      const std::uint64_t end = total * (c + 1) / chunks;
      threads.emplace_back([&, c, begin, end] {
        try {
          results[c] = work(begin, end);
        } catch (...) {
          errors[c] = std::current_exception();
        }
      });
    }
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return results;
}

}  // namespace gralg
