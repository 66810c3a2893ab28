#include "qhom/table.hpp"

#include "qhom/error.hpp"

#include <algorithm>
#include <string>

namespace qhom {

Table::Table(std::size_t order, std::vector<Element> entries)
    : order_(order), entries_(std::move(entries)) {
  if (order_ == 0) throw Error(ErrorCode::InvalidOrder, "table order must be at least 1");
  if (entries_.size() != order_ * order_)
    throw Error(ErrorCode::InvalidOrder,
                "expected " + std::to_string(order_ * order_) + " entries, got " +
                    std::to_string(entries_.size()));
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (entries_[i] >= order_)
      throw Error(ErrorCode::EntryOutOfRange,
                  "entry " + format_elements({i / order_, i % order_}) + " is " +
                      std::to_string(entries_[i] + 1) + ", outside 1.." + std::to_string(order_),
                  {i / order_, i % order_});
  }
}

Table Table::column_inverse() const {
  std::vector<Element> inv(entries_.size());
  for (std::size_t x = 0; x < order_; ++x)
    for (std::size_t y = 0; y < order_; ++y)
      inv[entries_[x * order_ + y] * order_ + y] = static_cast<Element>(x);
  return Table(order_, std::move(inv));
}

std::ptrdiff_t Table::first_non_permutation_column() const {
  std::vector<char> seen(order_);
  for (std::size_t y = 0; y < order_; ++y) {
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t x = 0; x < order_; ++x) {
      auto v = entries_[x * order_ + y];
      if (seen[v]) return static_cast<std::ptrdiff_t>(y);
      seen[v] = 1;
    }
  }
  return -1;
}

Table Table::relabel(std::span<const Element> perm) const {
  std::vector<Element> out(entries_.size());
  for (std::size_t x = 0; x < order_; ++x)
    for (std::size_t y = 0; y < order_; ++y)
      out[perm[x] * order_ + perm[y]] = perm[entries_[x * order_ + y]];
  return Table(order_, std::move(out));
}

bool is_permutation(std::span<const Element> values) {
  std::vector<char> seen(values.size());
  for (auto v : values) {
    if (v >= values.size() || seen[v]) return false;
    seen[v] = 1;
  }
  return true;
}

std::vector<Element> invert_permutation(std::span<const Element> perm) {
  std::vector<Element> inv(perm.size());
  for (std::size_t i = 0; i < perm.size(); ++i) inv[perm[i]] = static_cast<Element>(i);
  return inv;
}

}  // namespace qhom
