#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace qhom {

/// Element of a finite structure, 0-based. Text formats use 1..n.
using Element = std::uint32_t;

/// Square operation table: entry (x, y) is x * y for some binary operation.
/// Immutable after construction; every entry is checked to lie in [0, n).
class Table {
 public:
  Table() = default;
  Table(std::size_t order, std::vector<Element> entries);

  /// Builds a table by evaluating `op(x, y)` for every pair.
  template <typename Op>
  static Table generate(std::size_t order, Op&& op) {
    std::vector<Element> entries(order * order);
    for (std::size_t x = 0; x < order; ++x)
      for (std::size_t y = 0; y < order; ++y)
        entries[x * order + y] = static_cast<Element>(op(static_cast<Element>(x), static_cast<Element>(y)));
    return Table(order, std::move(entries));
  }

  std::size_t order() const noexcept { return order_; }
  Element operator()(Element x, Element y) const noexcept { return entries_[x * order_ + y]; }
  std::span<const Element> row(Element x) const noexcept {
    return {entries_.data() + x * order_, order_};
  }
  const std::vector<Element>& entries() const noexcept { return entries_; }

  /// Table of x ↦ y' with column-wise inverse, i.e. t(inv(x, y), y) = x.
  /// Precondition: every column is a permutation.
  Table column_inverse() const;

  /// Smallest column that is not a permutation of [0, n), if any.
  std::ptrdiff_t first_non_permutation_column() const;

  /// Conjugates by a relabelling: result(p[x], p[y]) = p[t(x, y)].
  Table relabel(std::span<const Element> perm) const;

  friend bool operator==(const Table&, const Table&) = default;

 private:
  std::size_t order_ = 0;
  std::vector<Element> entries_;
};

/// True if `values` is a permutation of [0, values.size()).
bool is_permutation(std::span<const Element> values);

/// Inverse of a permutation given as an image list.
std::vector<Element> invert_permutation(std::span<const Element> perm);

}  // namespace qhom
