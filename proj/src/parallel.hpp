#pragma once

// Private helpers shared by the OpenMP kernels.

#include "qhom/table.hpp"

#include <array>
#include <atomic>
#include <cstddef>
#include <optional>
#include <vector>

namespace qhom::detail {

/// Runs scan(x) for every leading coordinate x in parallel and returns the
/// hit with the smallest x. Rows above the best hit so far are skipped, so
/// the answer equals the serial lexicographic scan.
template <typename Hit, typename Scan>
std::optional<Hit> first_by_leading(std::size_t n, Scan scan) {
  std::vector<std::optional<Hit>> hits(n);
  std::atomic<std::ptrdiff_t> best{static_cast<std::ptrdiff_t>(n)};
  const auto count = static_cast<std::ptrdiff_t>(n);
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t x = 0; x < count; ++x) {
    if (x > best.load(std::memory_order_relaxed)) continue;
    hits[x] = scan(static_cast<Element>(x));
    if (hits[x]) {
      auto cur = best.load(std::memory_order_relaxed);
      while (x < cur && !best.compare_exchange_weak(cur, x, std::memory_order_relaxed)) {
      }
    }
  }
  const auto b = best.load();
  if (b < count) return hits[b];
  return std::nullopt;
}

}  // namespace qhom::detail
