#pragma once

#include <atomic>
#include <cstddef>
#include <thread>
#include <vector>

namespace ppalg {

/// Run fn(i) for i in [0, count) on up to `jobs` worker threads. Work is
/// handed out by an atomic counter; per-index results must be written to
/// disjoint slots by the caller.
template <class Fn>
void parallel_for(std::size_t count, int jobs, Fn&& fn) {
  if (jobs <= 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (;;) {
      std::size_t i = next.fetch_add(1);
      if (i >= count) return;
      fn(i);
    }
  };
  std::vector<std::thread> pool;
  int nthreads = jobs;
  if (static_cast<std::size_t>(nthreads) > count)
    nthreads = static_cast<int>(count);
  for (int t = 0; t < nthreads; ++t) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
}

}  // namespace ppalg
