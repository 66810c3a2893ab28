#include "qhom/acceptance.hpp"

#include "qhom/category.hpp"
#include "qhom/coloring.hpp"
#include "qhom/error.hpp"
#include "qhom/hom_construct.hpp"
#include "qhom/reference.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <map>
#include <numeric>
#include <sstream>

namespace qhom::acceptance {

namespace {

struct Failure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void expect(bool ok, const std::string& what) {
  if (!ok) throw Failure(what);
}

template <typename T>
std::string str(const T& v) {
  std::ostringstream out;
  out << v;
  return out.str();
}

std::size_t count(const Catalog& c, const std::string& link, const Structure& target,
                  bool biquandle = false) {
  const auto pd = c.link(link);
  const auto p = biquandle ? biquandle_presentation(pd) : quandle_presentation(pd);
  return enumerate_colorings(p, target).size();
}

ColoringSet colorings(const Catalog& c, const std::string& link, const Structure& target) {
  const auto pd = c.link(link);
  const auto p = is_biquandle(target) ? biquandle_presentation(pd) : quandle_presentation(pd);
  return enumerate_colorings(p, target);
}

std::vector<std::string> names_of(const Catalog& c, EntryKind kind) {
  std::vector<std::string> out;
  for (const auto& e : c.entries())
    if (e.kind == kind && e.path.parent_path() != "reference") out.push_back(e.name);
  return out;
}

/// Catalog quandles that validate and are abelian.
std::vector<std::pair<std::string, Quandle>> abelian_targets(const Catalog& c) {
  std::vector<std::pair<std::string, Quandle>> out;
  for (const auto& name : names_of(c, EntryKind::Quandle)) {
    auto q = c.quandle(name);
    if (is_abelian(q)) out.emplace_back(name, std::move(q));
  }
  return out;
}

std::string trefoil(const Catalog& c) {
  const Structure r3 = c.quandle("dihedral3");
  const auto plain = count(c, "3_1", r3);
  expect(plain == 9, "3_1 over dihedral3: " + str(plain) + " colorings, expected 9");
  for (const auto* kinked : {"3_1_kink", "3_1_kink_neg"}) {
    const auto k = count(c, kinked, r3);
    expect(k == 9, std::string(kinked) + " over dihedral3: " + str(k) + ", expected 9");
  }
  return "3_1 and both kinked diagrams: 9 colorings";
}

std::string enhancement(const Catalog& c) {
  const auto a = c.quandle("A_sec6");
  const auto expected = std::map<std::string, std::string>{{"L6a1", "16s^4t^4"}, {"L6a5", "16s^8t^8"}};
  std::vector<Quandle> homs;
  for (const auto& [link, poly] : expected) {
    const auto set = colorings(c, link, a);
    expect(set.size() == 16, link + ": " + str(set.size()) + " colorings, expected 16");
    auto h = hom_quandle(set);
    const auto phi = quandle_polynomial(h.structure);
    expect(phi == TwoVariablePolynomial::parse(poly),
           link + ": polynomial " + phi.to_string() + ", expected " + poly);
    const auto expected = c.quandle("hom_" + link + "_A_expected");
    expect(find_isomorphism(h.structure, expected).has_value(),
           link + ": hom quandle not isomorphic to the expected matrix");
    homs.push_back(h.structure);
  }
  expect(!find_isomorphism(homs[0], homs[1]), "L6a1 and L6a5 hom quandles are isomorphic");
  return "counts 16/16, 16 s^4 t^4 vs 16 s^8 t^8, both match the expected tables";
}

std::string trefoil_square(const Catalog& c) {
  const auto r3 = c.quandle("dihedral3");
  const auto h = hom_quandle(colorings(c, "3_1", r3));
  expect(h.structure.order() == 9, "order " + str(h.structure.order()) + ", expected 9");
  expect(find_isomorphism(h.structure, product_quandle(r3, r3)).has_value(),
         "hom quandle not isomorphic to dihedral3 × dihedral3");
  return "Hom(Q(3_1), R3) ≅ R3 × R3";
}

std::string trivial_homs(const Catalog&) {
  for (std::size_t n = 1; n <= 3; ++n)
    for (std::size_t m = 1; m <= 3; ++m) {
      const auto h = hom_quandle_from_finite(trivial_quandle(n), trivial_quandle(m));
      std::size_t power = 1;
      for (std::size_t i = 0; i < n; ++i) power *= m;
      expect(h.structure.order() == power,
             "Hom(T" + str(n) + ", T" + str(m) + ") has order " + str(h.structure.order()));
      expect(find_isomorphism(h.structure, trivial_quandle(power)).has_value(),
             "Hom(T" + str(n) + ", T" + str(m) + ") not trivial");
    }
  return "Hom(T_n, T_m) ≅ T_{m^n} for n, m ≤ 3";
}

std::string biquandle_example(const Catalog& c) {
  const auto mx = c.biquandle("MX");
  const auto ab = is_abelian_biquandle(mx);
  expect(ab.abelian, "MX is not abelian (equation " + str(ab.equation) + ")");
  const auto expected = std::map<std::string, std::string>{
      {"L4a1", "12s^77t^77 + 4s^77t^68 + 40s^71t^71 + 9s^68t^72 + 16s^65t^65"},
      {"L5a1", "16s^77t^77 + 40s^71t^71 + 4s^65t^56 + 9s^56t^60 + 12s^56t^56"}};
  std::vector<Biquandle> homs;
  for (const auto& [link, poly] : expected) {
    const auto set = colorings(c, link, mx);
    expect(set.size() == 81, link + ": " + str(set.size()) + " colorings, expected 81");
    auto h = hom_biquandle(set);
    const auto phi = upper_biquandle_polynomial(h.structure);
    expect(phi == TwoVariablePolynomial::parse(poly),
           link + ": polynomial " + phi.to_string() + ", expected " + poly);
    homs.push_back(h.structure);
  }
  expect(!find_biquandle_isomorphism(homs[0], homs[1]),
         "L4a1 and L5a1 hom biquandles are isomorphic");
  return "counts 81/81, polynomials match, hom biquandles not isomorphic";
}

std::string abelianness(const Catalog& c) {
  std::size_t checked = 0;
  for (std::size_t n = 1; n <= 8; ++n)
    for (long long t = 0; t < static_cast<long long>(n); ++t) {
      if (std::gcd(t, static_cast<long long>(n)) != 1) continue;
      expect(is_abelian(alexander_quandle(n, t)).abelian,
             "Alexander quandle n=" + str(n) + ", t=" + str(t) + " not abelian");
      ++checked;
    }
  expect(is_abelian(c.quandle("Q2")).abelian, "Q2 not abelian");
  const auto sp = c.quandle("symplectic4");
  const auto check = is_abelian(sp);
  expect(!check.abelian && check.witness, "symplectic4 reported abelian");
  const auto [x, y, z, w] = *check.witness;
  expect(sp.op(sp.op(x, y), sp.op(z, w)) != sp.op(sp.op(x, z), sp.op(y, w)),
         "reported witness is not a violation");
  // (2▷4)▷(1▷2) = 3 and (2▷1)▷(4▷2) = 4, 0-based below.
  const auto lhs = sp.op(sp.op(1, 3), sp.op(0, 1));
  const auto rhs = sp.op(sp.op(1, 0), sp.op(3, 1));
  expect(lhs == 2 && rhs == 3,
         "(2▷4)▷(1▷2) = " + str(lhs + 1) + ", (2▷1)▷(4▷2) = " + str(rhs + 1));
  expect(is_involutory(sp), "symplectic4 not involutory");
  return str(checked) + " Alexander quandles abelian; symplectic4 witness " +
         format_elements({x, y, z, w}) + "; (2▷4)▷(1▷2) = 3 ≠ 4 = (2▷1)▷(4▷2)";
}

std::string closure(const Catalog& c) {
  std::size_t pairs = 0;
  for (const auto& [name, target] : abelian_targets(c))
    for (const auto& link : names_of(c, EntryKind::Link)) {
      const auto set = colorings(c, link, target);
      expect(!closure_failure(set), link + " over " + name + " not closed");
      ++pairs;
    }

  const Structure sp = c.quandle("symplectic4");
  const auto bad = colorings(c, "3_1", sp);
  const auto pair = closure_failure(bad);
  if (!pair) {
    std::string open_links;
    for (const auto& link : names_of(c, EntryKind::Link))
      if (closure_failure(colorings(c, link, sp)))
        open_links += (open_links.empty() ? "" : ", ") + link;
    throw Failure(str(pairs) + " abelian pairs closed, but 3_1 over symplectic4: all " +
                  str(bad.size()) + " colorings are closed under pointwise ▷ (closure does fail for " +
                  (open_links.empty() ? std::string("no catalog link") : open_links) + ")");
  }
  const auto& q = std::get<Quandle>(sp);
  Coloring h(bad.colorings[pair->first].size());
  for (std::size_t k = 0; k < h.size(); ++k)
    h[k] = q.op(bad.colorings[pair->first][k], bad.colorings[pair->second][k]);
  expect(!satisfies_relations(bad.presentation, relation_tables(bad.presentation, sp), h),
         "closure witness is actually a coloring");
  return "symplectic4 witness colorings (" + str(pair->first + 1) + ", " +
         str(pair->second + 1) + "); " + str(pairs) + " abelian pairs closed";
}

std::string embeddings(const Catalog& c) {
  std::size_t pairs = 0;
  for (const auto& [name, target] : abelian_targets(c))
    for (const auto& link : names_of(c, EntryKind::Link)) {
      const auto h = hom_quandle(colorings(c, link, target));
      const auto map = constant_embedding(h);
      const auto image = induced_subquandle(h.structure, [&] {
        auto sorted = map;
        std::sort(sorted.begin(), sorted.end());
        return sorted;
      }());
      expect(find_isomorphism(image, target).has_value(),
             link + " over " + name + ": constant image not isomorphic to the target");
      ++pairs;
    }
  for (const auto& [link, target] :
       std::vector<std::pair<std::string, std::string>>{{"3_1", "dihedral3"}, {"L6a1", "A_sec6"}}) {
    const auto h = hom_quandle(colorings(c, link, c.quandle(target)));
    const auto map = embed_in_power(h, 2);
    expect(map.size() == h.structure.order(), link + ": embedding has wrong size");
  }
  return str(pairs) + " constant embeddings; 3_1 and L6a1 embed in A^2";
}

std::string adjunction(const Catalog& c) {
  const std::vector<std::pair<std::string, Quandle>> pool{
      {"T1", trivial_quandle(1)}, {"T2", trivial_quandle(2)}, {"T3", trivial_quandle(3)},
      {"dihedral3", c.quandle("dihedral3")}, {"Q2", c.quandle("Q2")}};
  std::size_t triples = 0;
  for (const auto& [qn, q] : pool)
    for (const auto& [an, a] : pool) {
      if (q.order() * a.order() > 9) continue;
      for (const auto& [xn, x] : pool) {
        const auto label = "(" + qn + ", " + an + ", " + xn + ")";
        const auto w = check_adjunction(q, a, x);
        expect(w.bihomomorphisms == w.homomorphisms, label + ": counts differ");
        const auto oracle = reference::bihomomorphisms_brute_force(q, a, x);
        expect(oracle == enumerate_bihomomorphisms(q, a, x), label + ": brute force disagrees");
        ++triples;
      }
    }
  return str(triples) + " triples: currying is a bijection and a quandle isomorphism";
}

std::string oracle(const Catalog& c) {
  std::vector<Structure> targets;
  for (const auto& e : c.entries()) {
    if (e.kind == EntryKind::Link || e.path.parent_path() == "reference") continue;
    try {
      targets.push_back(c.structure(e.name));
    } catch (const Error&) {
      // Entries that fail validation have no colorings to compare.
    }
  }
  std::size_t compared = 0;
  for (const auto& link : names_of(c, EntryKind::Link)) {
    const auto pd = c.link(link);
    const auto qp = quandle_presentation(pd);
    const auto bp = biquandle_presentation(pd);
    for (const auto& t : targets) {
      const auto& p = is_biquandle(t) ? bp : qp;
      if (reference::search_space(order(t), p.generator_count()) > 1'000'000) continue;
      const auto fast = enumerate_colorings(p, t).colorings;
      expect(fast == reference::colorings_brute_force(p, t),
             link + ": propagation disagrees with brute force");
      expect(fast == reference::colorings_serial(p, t),
             link + ": propagation disagrees with serial backtracking");
      ++compared;
    }
  }
  return str(compared) + " (link, target) instances agree";
}

}  // namespace

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> all{
      {1, "trefoil counting invariant", {"quandle", "link", "coloring"}, 10, trefoil},
      {2, "hom quandle enhancement of L6a1 / L6a5", {"quandle", "hom", "enhancement"}, 1000,
       enhancement},
      {3, "trefoil hom quandle is R3 squared", {"quandle", "hom"}, 100, trefoil_square},
      {4, "hom of trivial quandles", {"quandle", "hom"}, 1000, trivial_homs},
      {5, "biquandle example on L4a1 / L5a1", {"biquandle"}, 20000, biquandle_example},
      {6, "abelianness of Alexander, Q2, symplectic4", {"quandle", "abelian"}, 1000, abelianness},
      {7, "pointwise closure iff abelian", {"quandle", "hom", "closure"}, 2000, closure},
      {8, "constant and power embeddings", {"quandle", "hom", "embedding"}, 1000, embeddings},
      {9, "currying adjunction", {"category"}, 30000, adjunction},
      {10, "propagation matches brute force", {"coloring", "oracle"}, 10000,
       oracle},
  };
  return all;
}

bool matches(const Criterion& c, const std::string& filter) {
  if (filter.empty() || filter == std::to_string(c.id)) return true;
  for (const auto& g : c.groups)
    if (g == filter) return true;
  return c.title.find(filter) != std::string::npos;
}

Outcome run(const Criterion& c, const Catalog& catalog) {
  Outcome o{c.id, c.title, false, {}, 0, c.limit_ms};
  const auto start = std::chrono::steady_clock::now();
  try {
    o.detail = c.run(catalog);
    o.passed = true;
  } catch (const Error& e) {
    o.detail = e.what();
  } catch (const std::exception& e) {
    o.detail = e.what();
  }
  o.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  if (o.passed && o.elapsed_ms > o.limit_ms) {
    o.passed = false;
    o.detail = "over time limit; " + o.detail;
  }
  return o;
}

std::string format(const Outcome& o) {
  char timing[64];
  std::snprintf(timing, sizeof timing, "(%.1f ms / %.0f ms)", o.elapsed_ms, o.limit_ms);
  return std::string(o.passed ? "PASS" : "FAIL") + "  " + std::to_string(o.id) + "  " + o.title +
         "  " + timing + "  " + o.detail;
}

}  // namespace qhom::acceptance
