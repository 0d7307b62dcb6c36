#pragma once

#include <atomic>
#include <cstddef>
#include <thread>
#include <vector>

namespace equibound {

/// Worker count: EQUIBOUND_THREADS if set (clamped to >= 1), otherwise
/// hardware concurrency. Thread count never changes numerical results.
std::size_t worker_count();

inline constexpr std::size_t kBlockSize = 4096;

/// Runs fn(block_index, begin, end) over fixed-size blocks of [0, count).
/// Blocks are identical regardless of worker count; each block is processed
/// by exactly one worker. Results that must be deterministic should be
/// accumulated per block and merged in block order by the caller.
template <typename Fn>
void for_each_block(std::size_t count, Fn&& fn) {
  const std::size_t nblocks = (count + kBlockSize - 1) / kBlockSize;
  const std::size_t nworkers = std::min(worker_count(), std::max<std::size_t>(nblocks, 1));
  if (nworkers <= 1) {
    for (std::size_t b = 0; b < nblocks; ++b)
      fn(b, b * kBlockSize, std::min(count, (b + 1) * kBlockSize));
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  pool.reserve(nworkers);
  for (std::size_t w = 0; w < nworkers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t b = next.fetch_add(1); b < nblocks; b = next.fetch_add(1))
        fn(b, b * kBlockSize, std::min(count, (b + 1) * kBlockSize));
    });
  }
  for (auto& t : pool) t.join();
}

}  // namespace equibound
