#pragma once

// Shared fixtures for the unit tests: catalog access, small tables, and
// independent brute-force helpers.

#include "qhom/catalog.hpp"
#include "qhom/quandle.hpp"
#include "qhom/table.hpp"

#include <algorithm>
#include <numeric>
#include <vector>

namespace qtest {

using qhom::Element;

inline const qhom::Catalog& catalog() {
  static const qhom::Catalog c = qhom::Catalog::load();
  return c;
}

/// 1-based rows, as written in the text format.
inline qhom::Table table_1(const std::vector<std::vector<int>>& rows) {
  std::vector<Element> e;
  for (const auto& r : rows)
    for (auto v : r) e.push_back(static_cast<Element>(v - 1));
  return qhom::Table(rows.size(), std::move(e));
}

inline qhom::Quandle quandle_1(const std::vector<std::vector<int>>& rows) {
  return qhom::Quandle::validate(table_1(rows));
}

inline qhom::Quandle dihedral3() { return quandle_1({{1, 3, 2}, {3, 2, 1}, {2, 1, 3}}); }
inline qhom::Quandle symplectic4() {
  return quandle_1({{1, 1, 1, 1}, {2, 2, 4, 3}, {3, 4, 3, 2}, {4, 3, 2, 4}});
}
inline qhom::Quandle q2() { return quandle_1({{1, 1, 2}, {2, 2, 1}, {3, 3, 3}}); }
inline qhom::Quandle a4() { return quandle_1({{1, 4, 4, 1}, {3, 2, 2, 3}, {2, 3, 3, 2}, {4, 1, 1, 4}}); }

/// Every permutation of [0, n) in lexicographic order.
inline std::vector<std::vector<Element>> permutations(std::size_t n) {
  std::vector<Element> p(n);
  std::iota(p.begin(), p.end(), 0u);
  std::vector<std::vector<Element>> out;
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

/// All labelled quandles of order n (n ≤ 4), built column by column from
/// permutations fixing the column index, filtered by self-distributivity.
inline std::vector<qhom::Quandle> all_quandles(std::size_t n) {
  std::vector<std::vector<Element>> fixing;
  std::vector<std::vector<std::vector<Element>>> choices(n);
  for (const auto& p : permutations(n))
    for (Element y = 0; y < n; ++y)
      if (p[y] == y) choices[y].push_back(p);
  std::vector<qhom::Quandle> out;
  std::vector<std::size_t> pick(n, 0);
  while (true) {
    std::vector<Element> e(n * n);
    for (Element y = 0; y < n; ++y)
      for (Element x = 0; x < n; ++x) e[x * n + y] = choices[y][pick[y]][x];
    qhom::Table t(n, e);
    bool sd = true;
    for (Element x = 0; x < n && sd; ++x)
      for (Element y = 0; y < n && sd; ++y)
        for (Element z = 0; z < n && sd; ++z) sd = t(t(x, y), z) == t(t(x, z), t(y, z));
    if (sd) out.push_back(qhom::Quandle::validate(t));
    std::size_t i = 0;
    while (i < n && ++pick[i] == choices[i].size()) pick[i++] = 0;
    if (i == n) break;
  }
  return out;
}

/// Brute force over all bijections.
inline bool isomorphic_brute_force(const qhom::Quandle& a, const qhom::Quandle& b) {
  if (a.order() != b.order()) return false;
  const auto n = a.order();
  for (const auto& f : permutations(n)) {
    bool ok = true;
    for (Element x = 0; x < n && ok; ++x)
      for (Element y = 0; y < n && ok; ++y) ok = f[a.op(x, y)] == b.op(f[x], f[y]);
    if (ok) return true;
  }
  return false;
}

}  // namespace qtest
