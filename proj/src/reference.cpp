#include "qhom/reference.hpp"

#include <limits>

namespace qhom::reference {

std::optional<std::array<Element, 3>> self_distributivity_violation(const Table& t) {
  const auto n = t.order();
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y)
      for (Element z = 0; z < n; ++z)
        if (t(t(x, y), z) != t(t(x, z), t(y, z))) return std::array<Element, 3>{x, y, z};
  return std::nullopt;
}

std::optional<std::array<Element, 4>> medial_violation(const Table& t) {
  const auto n = t.order();
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y)
      for (Element z = 0; z < n; ++z)
        for (Element w = 0; w < n; ++w)
          if (t(t(x, y), t(z, w)) != t(t(x, z), t(y, w))) return std::array<Element, 4>{x, y, z, w};
  return std::nullopt;
}

namespace {

void backtrack(const LinkPresentation& p, const std::array<const Table*, 6>& tables,
               const std::vector<std::vector<std::size_t>>& ready, std::size_t n, Coloring& c,
               std::size_t g, std::vector<Coloring>& out) {
  if (g == c.size()) {
    out.push_back(c);
    return;
  }
  for (Element v = 0; v < n; ++v) {
    c[g] = v;
    bool ok = true;
    for (auto i : ready[g]) {
      const auto& r = p.relations[i];
      if ((*tables[static_cast<int>(r.op)])(c[r.left], c[r.right]) != c[r.output]) {
        ok = false;
        break;
      }
    }
    if (ok) backtrack(p, tables, ready, n, c, g + 1, out);
  }
}

}  // namespace

std::vector<Coloring> colorings_serial(const LinkPresentation& p, const Structure& target) {
  const auto tables = relation_tables(p, target);
  const auto g = p.generator_count();
  // ready[k]: relations whose largest generator index is k.
  std::vector<std::vector<std::size_t>> ready(g);
  for (std::size_t i = 0; i < p.relations.size(); ++i) {
    const auto& r = p.relations[i];
    ready[std::max({r.output, r.left, r.right})].push_back(i);
  }
  std::vector<Coloring> out;
  Coloring c(g, 0);
  backtrack(p, tables, ready, order(target), c, 0, out);
  return out;
}

std::size_t search_space(std::size_t n, std::size_t generators) {
  std::size_t total = 1;
  for (std::size_t i = 0; i < generators; ++i) {
    if (n != 0 && total > std::numeric_limits<std::size_t>::max() / n)
      return std::numeric_limits<std::size_t>::max();
    total *= n;
  }
  return total;
}

namespace {

/// Calls visit(assignment) for every assignment of `length` values in [0, n)
/// in lexicographic order.
template <typename Visit>
void for_each_assignment(std::size_t n, std::size_t length, Visit visit) {
  std::vector<Element> a(length, 0);
  if (n == 0 && length > 0) return;
  while (true) {
    visit(a);
    std::size_t i = length;
    while (i > 0) {
      --i;
      if (++a[i] < n) break;
      a[i] = 0;
      if (i == 0) return;
    }
    if (length == 0) return;
  }
}

}  // namespace

std::vector<Coloring> colorings_brute_force(const LinkPresentation& p, const Structure& target) {
  const auto tables = relation_tables(p, target);
  std::vector<Coloring> out;
  for_each_assignment(order(target), p.generator_count(), [&](const std::vector<Element>& a) {
    if (satisfies_relations(p, tables, a)) out.push_back(a);
  });
  return out;
}

std::vector<std::vector<Element>> quandle_homs_brute_force(const Quandle& src, const Quandle& dst) {
  std::vector<std::vector<Element>> out;
  const auto n = src.order();
  for_each_assignment(dst.order(), n, [&](const std::vector<Element>& f) {
    for (Element x = 0; x < n; ++x)
      for (Element y = 0; y < n; ++y)
        if (f[src.op(x, y)] != dst.op(f[x], f[y])) return;
    out.push_back(f);
  });
  return out;
}

std::vector<std::vector<Element>> bihomomorphisms_brute_force(const Quandle& q, const Quandle& a,
                                                              const Quandle& x) {
  std::vector<std::vector<Element>> out;
  const auto nq = q.order();
  const auto na = a.order();
  for_each_assignment(x.order(), nq * na, [&](const std::vector<Element>& f) {
    auto at = [&](Element i, Element j) { return f[i * na + j]; };
    for (Element i = 0; i < nq; ++i)
      for (Element j = 0; j < na; ++j)
        for (Element k = 0; k < na; ++k)
          if (at(i, a.op(j, k)) != x.op(at(i, j), at(i, k))) return;
    for (Element j = 0; j < na; ++j)
      for (Element i = 0; i < nq; ++i)
        for (Element k = 0; k < nq; ++k)
          if (at(q.op(i, k), j) != x.op(at(i, j), at(k, j))) return;
    out.push_back(f);
  });
  return out;
}

}  // namespace qhom::reference
