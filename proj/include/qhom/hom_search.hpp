#pragma once

// Backtracking search for structure-preserving maps between finite
// multi-operation algebras (one table per binary operation). Used for
// quandle/biquandle homomorphism enumeration and isomorphism tests.

#include "qhom/table.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace qhom {

struct SearchOptions {
  /// Only bijections are reported (requires equal orders).
  bool bijective = false;
  /// Stop after this many maps; 0 means no limit.
  std::size_t limit = 0;
  /// allowed[x * dst_order + v] == 0 forbids mapping x to v. Empty: no filter.
  std::vector<char> allowed;
  /// Split the first branching element across OpenMP threads.
  bool parallel = true;
};

/// Maps f with f(T_k(a, b)) = U_k(f(a), f(b)) for every op k, in
/// lexicographic order. `src` and `dst` must have the same number of tables.
std::vector<std::vector<Element>> search_homomorphisms(std::span<const Table* const> src,
                                                       std::span<const Table* const> dst,
                                                       const SearchOptions& options = {});

bool preserves_operations(std::span<const Table* const> src, std::span<const Table* const> dst,
                          std::span<const Element> map);

}  // namespace qhom
