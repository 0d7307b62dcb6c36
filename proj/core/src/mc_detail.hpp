#pragma once

#include <cmath>
#include <vector>

#include "equibound/estimators.hpp"
#include "equibound/parallel.hpp"

namespace equibound::detail {

struct Accumulator {
  double sum = 0.0;
  double sum_sq = 0.0;
  std::size_t n = 0;

  void add(double v) {
    sum += v;
    sum_sq += v * v;
    ++n;
  }
  void merge(const Accumulator& o) {
    sum += o.sum;
    sum_sq += o.sum_sq;
    n += o.n;
  }
  MCEstimate estimate() const {
    MCEstimate e;
    e.count = n;
    if (n == 0) return e;
    e.mean = sum / static_cast<double>(n);
    if (n > 1) {
      const double var = (sum_sq - sum * sum / static_cast<double>(n)) /
                         static_cast<double>(n - 1);
      e.std_error = std::sqrt(std::max(var, 0.0) / static_cast<double>(n));
    }
    return e;
  }
};

// Deterministic reduction: per-block accumulators merged in block order,
// so results do not depend on the worker count.
template <typename PerDraw>
std::vector<Accumulator> reduce_blocks(const SampleBatch& batch, std::size_t width,
                                       PerDraw per_draw) {
  const std::size_t count = batch.count();
  const std::size_t nblocks = (count + kBlockSize - 1) / kBlockSize;
  std::vector<std::vector<Accumulator>> partials(nblocks,
                                                 std::vector<Accumulator>(width));
  for_each_block(count, [&](std::size_t b, std::size_t begin, std::size_t end) {
    auto& acc = partials[b];
    for (std::size_t i = begin; i < end; ++i) per_draw(batch.draws[i], acc);
  });
  std::vector<Accumulator> total(width);
  for (const auto& block : partials)
    for (std::size_t k = 0; k < width; ++k) total[k].merge(block[k]);
  return total;
}

template <typename Fn>
MCEstimate mc_mean(const SampleBatch& batch, Fn per_draw_value) {
  auto total = reduce_blocks(batch, 1, [&](const JointDraw& d, std::vector<Accumulator>& acc) {
    acc[0].add(per_draw_value(d));
  });
  return total[0].estimate();
}

}  // namespace equibound::detail
