#include "qhom/hom_search.hpp"

#include <algorithm>
#include <cassert>

namespace qhom {

namespace {

constexpr Element kUnassigned = static_cast<Element>(-1);

class HomSearch {
 public:
  HomSearch(std::span<const Table* const> src, std::span<const Table* const> dst,
            const SearchOptions& options)
      : src_(src),
        dst_(dst),
        options_(options),
        n_(src.front()->order()),
        m_(dst.front()->order()),
        map_(n_, kUnassigned),
        used_(m_, 0) {}

  /// Explores the subtree where the first branching element (0) maps to `first`.
  void run_from(Element first, std::vector<std::vector<Element>>& out) {
    out_ = &out;
    auto mark = trail_.size();
    if (assign(0, first) && propagate()) descend();
    undo(mark);
  }

  void run_all(std::vector<std::vector<Element>>& out) {
    out_ = &out;
    descend();
  }

 private:
  bool allowed(Element x, Element v) const {
    return options_.allowed.empty() || options_.allowed[x * m_ + v] != 0;
  }

  bool assign(Element x, Element v) {
    if (!allowed(x, v)) return false;
    if (options_.bijective) {
      if (used_[v]) return false;
      used_[v] = 1;
    }
    map_[x] = v;
    trail_.push_back(x);
    return true;
  }

  void undo(std::size_t mark) {
    while (trail_.size() > mark) {
      auto x = trail_.back();
      trail_.pop_back();
      if (options_.bijective) used_[map_[x]] = 0;
      map_[x] = kUnassigned;
    }
    queue_head_ = std::min(queue_head_, trail_.size());
  }

  bool constrain(Element x, Element v) {
    if (map_[x] == kUnassigned) return assign(x, v);
    return map_[x] == v;
  }

  // Closes the current partial map under all operations.
  bool propagate() {
    while (queue_head_ < trail_.size()) {
      const auto a = trail_[queue_head_++];
      for (std::size_t i = 0; i < queue_head_; ++i) {
        const auto b = trail_[i];
        for (std::size_t k = 0; k < src_.size(); ++k) {
          const Table& s = *src_[k];
          const Table& d = *dst_[k];
          if (!constrain(s(a, b), d(map_[a], map_[b]))) return false;
          if (!constrain(s(b, a), d(map_[b], map_[a]))) return false;
        }
      }
    }
    return true;
  }

  void descend() {
    if (stop()) return;
    auto it = std::find(map_.begin(), map_.end(), kUnassigned);
    if (it == map_.end()) {
      out_->push_back(map_);
      return;
    }
    const auto x = static_cast<Element>(it - map_.begin());
    for (Element v = 0; v < m_; ++v) {
      auto mark = trail_.size();
      auto head = queue_head_;
      if (assign(x, v) && propagate()) descend();
      undo(mark);
      queue_head_ = head;
      if (stop()) return;
    }
  }

  bool stop() const { return options_.limit != 0 && out_->size() >= options_.limit; }

  std::span<const Table* const> src_;
  std::span<const Table* const> dst_;
  const SearchOptions& options_;
  std::size_t n_;
  std::size_t m_;
  std::vector<Element> map_;
  std::vector<char> used_;
  std::vector<Element> trail_;
  std::size_t queue_head_ = 0;
  std::vector<std::vector<Element>>* out_ = nullptr;
};

}  // namespace

std::vector<std::vector<Element>> search_homomorphisms(std::span<const Table* const> src,
                                                       std::span<const Table* const> dst,
                                                       const SearchOptions& options) {
  assert(!src.empty() && src.size() == dst.size());
  const auto n = src.front()->order();
  const auto m = dst.front()->order();
  if (options.bijective && n != m) return {};

  std::vector<std::vector<Element>> result;
  if (!options.parallel || options.limit != 0) {
    HomSearch search(src, dst, options);
    search.run_all(result);
    return result;
  }

  std::vector<std::vector<std::vector<Element>>> per_value(m);
  const auto count = static_cast<std::ptrdiff_t>(m);
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t v = 0; v < count; ++v) {
    HomSearch search(src, dst, options);
    search.run_from(static_cast<Element>(v), per_value[v]);
  }
  for (auto& part : per_value)
    for (auto& map : part) result.push_back(std::move(map));
  std::sort(result.begin(), result.end());
  return result;
}

bool preserves_operations(std::span<const Table* const> src, std::span<const Table* const> dst,
                          std::span<const Element> map) {
  const auto n = src.front()->order();
  if (map.size() != n) return false;
  for (std::size_t k = 0; k < src.size(); ++k)
    for (Element a = 0; a < n; ++a)
      for (Element b = 0; b < n; ++b)
        if (map[(*src[k])(a, b)] != (*dst[k])(map[a], map[b])) return false;
  return true;
}

}  // namespace qhom
