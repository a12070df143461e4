#pragma once

#include <algorithm>
#include <thread>
#include <vector>

namespace bptrial {

/// Runs fn(begin, end) over a static partition of [0, n) across `workers`
/// threads. Callers must make per-item results independent of the
/// partition (per-item derived RNG streams, per-item output slots) so that
/// any worker count produces identical results.
template <class Fn>
void parallel_chunks(int n, int workers, Fn&& fn) {
  workers = std::clamp(workers, 1, std::max(1, n));
  if (workers == 1 || n <= 1) {
    fn(0, n);
    return;
  }
  std::vector<std::thread> threads;
  threads.reserve(static_cast<std::size_t>(workers - 1));
  const int chunk = (n + workers - 1) / workers;
  for (int w = 1; w < workers; ++w) {
    const int begin = w * chunk;
    const int end = std::min(n, begin + chunk);
    if (begin < end) {
      threads.emplace_back(fn, begin, end);
    }
  }
  fn(0, std::min(n, chunk));
  for (auto& t : threads) {
    t.join();
  }
}

}  // namespace bptrial
