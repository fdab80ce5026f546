#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <functional>
#include <thread>
#include <vector>

namespace embedlb {

// Worker count used by parallel reductions. Results never depend on it:
// work is split into fixed-size chunks and partials are merged in chunk
// order, so output is bit-stable for any thread count.
int worker_threads();
void set_worker_threads(int n);

inline constexpr std::uint64_t kChunk = 1 << 14;

// Deterministic map-reduce over [0, n): chunk_fn computes the partial for
// [lo, hi), merge folds partials in increasing chunk order.
template <typename T, typename ChunkFn, typename MergeFn>
T parallel_reduce(std::uint64_t n, T init, ChunkFn chunk_fn, MergeFn merge) {
  if (n == 0) return init;
  const std::uint64_t nchunks = (n + kChunk - 1) / kChunk;
  std::vector<T> partials(nchunks, init);
  const int nt = worker_threads();
  if (nt <= 1 || nchunks == 1) {
    for (std::uint64_t c = 0; c < nchunks; ++c) {
      std::uint64_t lo = c * kChunk, hi = std::min(n, lo + kChunk);
      partials[c] = chunk_fn(lo, hi);
    }
  } else {
    std::vector<std::thread> pool;
    std::atomic<std::uint64_t> next{0};
    for (int t = 0; t < nt; ++t) {
      pool.emplace_back([&] {
        for (;;) {
          std::uint64_t c = next.fetch_add(1);
          if (c >= nchunks) break;
          std::uint64_t lo = c * kChunk, hi = std::min(n, lo + kChunk);
          partials[c] = chunk_fn(lo, hi);
        }
      });
    }
    for (auto& th : pool) th.join();
  }
  T acc = init;
  for (std::uint64_t c = 0; c < nchunks; ++c) acc = merge(acc, partials[c]);
  return acc;
}

}  // namespace embedlb
