#include "qhom/hom_construct.hpp"

#include "qhom/error.hpp"
#include "qhom/hom_search.hpp"

#include <algorithm>
#include <map>
#include <string>

namespace qhom {

namespace {

void require_abelian(const Quandle& q) {
  const auto& check = q.abelian_check();
  if (check) return;
  std::vector<std::size_t> wit(check.witness->begin(), check.witness->end());
  throw Error(ErrorCode::TargetNotAbelian,
              "target is not abelian: (x▷y)▷(z▷w) ≠ (x▷z)▷(y▷w) at " + format_elements(wit), wit);
}

void require_abelian(const Biquandle& b) {
  const auto check = is_abelian_biquandle(b);
  if (check) return;
  std::vector<std::size_t> wit(check.witness->begin(), check.witness->end());
  throw Error(ErrorCode::TargetNotAbelian,
              "target biquandle is not abelian: equation " + std::to_string(check.equation) +
                  " fails at (a, b, x, y) = " + format_elements(wit),
              wit);
}

/// Sorted-vector index lookup for colorings.
class Index {
 public:
  explicit Index(const std::vector<Coloring>& sorted) : sorted_(sorted) {}
  std::optional<Element> find(const Coloring& c) const {
    auto it = std::lower_bound(sorted_.begin(), sorted_.end(), c);
    if (it == sorted_.end() || *it != c) return std::nullopt;
    return static_cast<Element>(it - sorted_.begin());
  }

 private:
  const std::vector<Coloring>& sorted_;
};

/// Table over colorings with entry (f, g) = index of pointwise op(f, g).
template <typename Op>
Table pointwise_table(const std::vector<Coloring>& colorings, Op op) {
  const auto m = colorings.size();
  const Index index(colorings);
  std::vector<Element> entries(m * m);
  std::vector<std::ptrdiff_t> missing(m, -1);
  const auto count = static_cast<std::ptrdiff_t>(m);
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t f = 0; f < count; ++f) {
    Coloring h(colorings[f].size());
    for (std::size_t g = 0; g < m; ++g) {
      for (std::size_t k = 0; k < h.size(); ++k) h[k] = op(colorings[f][k], colorings[g][k]);
      auto i = index.find(h);
      if (!i) {
        missing[f] = static_cast<std::ptrdiff_t>(g);
        break;
      }
      entries[f * m + g] = *i;
    }
  }
  for (std::size_t f = 0; f < m; ++f)
    if (missing[f] >= 0) {
      const auto g = static_cast<std::size_t>(missing[f]);
      throw Error(ErrorCode::ClosureFailure,
                  "pointwise result of colorings " + std::to_string(f + 1) + " and " +
                      std::to_string(g + 1) + " is not a coloring",
                  {f, g});
    }
  return Table(m, std::move(entries));
}

}  // namespace

Quandle pointwise_quandle(const std::vector<Coloring>& maps, const Quandle& target) {
  require_abelian(target);
  return Quandle::validate(
      pointwise_table(maps, [&](Element a, Element b) { return target.op(a, b); }));
}

HomQuandle hom_quandle(const ColoringSet& set) {
  const auto* target = std::get_if<Quandle>(&set.target);
  if (!target) throw Error(ErrorCode::KindMismatch, "hom quandle needs a quandle target");
  require_abelian(*target);
  auto table = pointwise_table(set.colorings, [&](Element a, Element b) { return target->op(a, b); });
  return {set.colorings, *target, Quandle::validate(std::move(table)), set.free_generators};
}

HomBiquandle hom_biquandle(const ColoringSet& set) {
  const auto* target = std::get_if<Biquandle>(&set.target);
  if (!target) throw Error(ErrorCode::KindMismatch, "hom biquandle needs a biquandle target");
  require_abelian(*target);
  // (f^g)(x) = f(x)^{g(x)}, (f_g)(x) = f(x)_{g(x)}
  auto up = pointwise_table(set.colorings, [&](Element a, Element b) { return target->up(a, b); });
  auto down =
      pointwise_table(set.colorings, [&](Element a, Element b) { return target->down(a, b); });
  const auto m = set.colorings.size();
  std::vector<Element> matrix(2 * m * m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      matrix[i * 2 * m + j] = up(static_cast<Element>(i), static_cast<Element>(j));
      matrix[i * 2 * m + m + j] = down(static_cast<Element>(i), static_cast<Element>(j));
    }
  return {set.colorings, *target, Biquandle::validate(m, std::move(matrix))};
}

HomQuandle hom_quandle_from_finite(const Quandle& src, const Quandle& dst) {
  require_abelian(dst);
  auto homs = enumerate_quandle_homs(src, dst);
  auto table = pointwise_table(homs, [&](Element a, Element b) { return dst.op(a, b); });
  return {std::move(homs), dst, Quandle::validate(std::move(table)), {}};
}

std::optional<std::pair<std::size_t, std::size_t>> closure_failure(const ColoringSet& set) {
  const auto* target = std::get_if<Quandle>(&set.target);
  if (!target) throw Error(ErrorCode::KindMismatch, "closure check needs a quandle target");
  const Index index(set.colorings);
  const auto m = set.colorings.size();
  for (std::size_t f = 0; f < m; ++f)
    for (std::size_t g = 0; g < m; ++g) {
      Coloring h(set.colorings[f].size());
      for (std::size_t k = 0; k < h.size(); ++k)
        h[k] = target->op(set.colorings[f][k], set.colorings[g][k]);
      if (!index.find(h)) return std::pair{f, g};
    }
  return std::nullopt;
}

std::vector<Element> constant_embedding(const HomQuandle& h) {
  const auto n = h.target.order();
  const auto width = h.colorings.empty() ? 0 : h.colorings.front().size();
  const Index index(h.colorings);
  std::vector<Element> map(n);
  for (Element a = 0; a < n; ++a) {
    auto i = index.find(Coloring(width, a));
    if (!i)
      throw Error(ErrorCode::WitnessFailure,
                  "constant coloring " + std::to_string(a + 1) + " missing", {a});
    map[a] = *i;
  }
  if (!is_quandle_homomorphism(h.target, h.structure, map))
    throw Error(ErrorCode::WitnessFailure, "constant embedding is not a homomorphism");
  return map;
}

Quandle power_quandle(const Quandle& q, std::size_t c) {
  if (c == 0) throw Error(ErrorCode::InvalidOrder, "power needs c ≥ 1");
  auto p = q;
  for (std::size_t i = 1; i < c; ++i) p = product_quandle(p, q);
  return p;
}

namespace {

std::optional<std::vector<Element>> project(const HomQuandle& h,
                                            const std::vector<std::uint32_t>& coords) {
  const auto n = h.target.order();
  std::vector<Element> map(h.colorings.size());
  std::vector<char> used;
  std::size_t size = 1;
  for (std::size_t i = 0; i < coords.size(); ++i) size *= n;
  used.assign(size, 0);
  for (std::size_t f = 0; f < h.colorings.size(); ++f) {
    std::size_t v = 0;
    for (auto g : coords) v = v * n + h.colorings[f][g];
    if (used[v]) return std::nullopt;
    used[v] = 1;
    map[f] = static_cast<Element>(v);
  }
  return map;
}

bool next_combination(std::vector<std::uint32_t>& c, std::uint32_t total) {
  const auto k = c.size();
  for (std::size_t i = k; i-- > 0;) {
    if (c[i] < total - k + i) {
      ++c[i];
      for (auto j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
      return true;
    }
  }
  return false;
}

}  // namespace

std::vector<Element> embed_in_power(const HomQuandle& h, std::size_t c,
                                    std::vector<std::uint32_t>* generators) {
  if (c == 0) throw Error(ErrorCode::GeneratorSetTooSmall, "c must be at least 1");
  const auto width = static_cast<std::uint32_t>(h.colorings.empty() ? 0 : h.colorings.front().size());
  auto finish = [&](std::vector<std::uint32_t> coords, std::vector<Element> map) {
    const auto power = power_quandle(h.target, c);
    if (!is_quandle_homomorphism(h.structure, power, map))
      throw Error(ErrorCode::WitnessFailure, "projection is not a homomorphism");
    if (generators) *generators = std::move(coords);
    return map;
  };

  // Prefer the free generators, padded with the lowest remaining ones.
  if (h.free_generators.size() <= c && c <= width) {
    auto coords = h.free_generators;
    for (std::uint32_t g = 0; coords.size() < c && g < width; ++g)
      if (std::find(coords.begin(), coords.end(), g) == coords.end()) coords.push_back(g);
    if (auto map = project(h, coords)) return finish(coords, std::move(*map));
  }
  if (c <= width) {
    std::vector<std::uint32_t> coords(c);
    for (std::uint32_t i = 0; i < c; ++i) coords[i] = i;
    do {
      if (auto map = project(h, coords)) return finish(coords, std::move(*map));
    } while (next_combination(coords, width));
  }
  throw Error(ErrorCode::GeneratorSetTooSmall,
              "no " + std::to_string(c) + " generators determine every coloring");
}

}  // namespace qhom
