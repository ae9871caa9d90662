#pragma once

#include <atomic>
#include <thread>
#include <vector>

namespace qhorn {

/// Runs fn(i) for i in [0, count) on up to `jobs` worker threads (jobs <= 1
/// runs inline). Workers pull indices from a shared counter; callers that
/// need determinism write results into index-addressed slots.
template <typename Fn>
void parallel_for(size_t count, int jobs, Fn&& fn) {
  if (jobs <= 1 || count < 2) {
    for (size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  unsigned workers = std::min<size_t>(jobs, count);
  std::atomic<size_t> next{0};
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (size_t i = next.fetch_add(1); i < count; i = next.fetch_add(1)) fn(i);
    });
  }
  for (auto& t : pool) t.join();
}

}  // namespace qhorn
