#include "support.hpp"

#include "qhom/biquandle.hpp"
#include "qhom/category.hpp"
#include "qhom/error.hpp"
#include "qhom/hom_construct.hpp"
#include "qhom/reference.hpp"
#include "qhom/table_io.hpp"

#include <doctest.h>

#include <set>
#include <tuple>

using namespace qhom;

namespace {

ColoringSet colorings(const char* link, const Structure& target) {
  const auto pd = qtest::catalog().link(link);
  if (is_biquandle(target)) return enumerate_colorings(biquandle_presentation(pd), target);
  return enumerate_colorings(quandle_presentation(pd), target);
}

HomQuandle hom(const char* link, const Quandle& q) { return hom_quandle(colorings(link, q)); }

Quandle relabel(const Quandle& q, const std::vector<Element>& p) {
  const auto n = q.order();
  std::vector<Element> e(n * n);
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y) e[p[x] * n + p[y]] = p[q.op(x, y)];
  return Quandle::validate(Table(n, std::move(e)));
}

std::vector<Quandle> abelian_targets() {
  std::vector<Quandle> out;
  for (const auto& q : qtest::all_quandles(3))
    if (is_abelian(q)) out.push_back(q);
  out.push_back(qtest::catalog().quandle("A_sec6"));
  return out;
}

const std::vector<const char*> kLinks{"3_1", "L4a1", "L5a1", "L6a1", "L6a5", "unknot"};

}  // namespace

TEST_SUITE("hom") {
  TEST_CASE("trefoil over the dihedral quandle of order 3") {
    const auto h = hom("3_1", qtest::dihedral3());
    CHECK(h.structure.order() == 9);
    const auto sq = read_quandle(read_text_file(qtest::catalog().directory() / "reference/dihedral3_squared.txt"));
    CHECK(find_isomorphism(h.structure, sq));
    CHECK(find_isomorphism(h.structure, power_quandle(qtest::dihedral3(), 2)));
  }

  TEST_CASE("two links with equal counts but different hom quandles") {
    const auto a = qtest::catalog().quandle("A_sec6");
    const auto h1 = hom("L6a1", a);
    const auto h5 = hom("L6a5", a);
    CHECK(quandle_polynomial(h1.structure).to_string() == "16 s^4 t^4");
    CHECK(quandle_polynomial(h5.structure).to_string() == "16 s^8 t^8");
    CHECK_FALSE(find_isomorphism(h1.structure, h5.structure));
    const auto dir = qtest::catalog().directory() / "reference";
    CHECK(find_isomorphism(h1.structure, read_quandle(read_text_file(dir / "hom_L6a1_A_expected.txt"))));
    CHECK(find_isomorphism(h5.structure, read_quandle(read_text_file(dir / "hom_L6a5_A_expected.txt"))));
  }

  TEST_CASE("non-abelian targets are refused") {
    try {
      hom("3_1", qtest::symplectic4());
      FAIL("accepted a non-abelian target");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::TargetNotAbelian);
      CHECK(e.witness().size() == 4);
    }
    CHECK_THROWS_AS(hom_biquandle(colorings("3_1", from_quandle(qtest::symplectic4()))), Error);
  }

  TEST_CASE("colorings into an abelian target are closed") {
    for (const auto& q : abelian_targets())
      for (const auto* name : kLinks) CHECK_FALSE(closure_failure(colorings(name, q)));
  }

  TEST_CASE("closure over the symplectic quandle") {
    const auto s = qtest::symplectic4();
    const auto trefoil = colorings("3_1", s);
    CHECK(trefoil.size() == 10);
    CHECK_FALSE(closure_failure(trefoil));
    const auto l4 = colorings("L4a1", s);
    const auto bad = closure_failure(l4);
    REQUIRE(bad);
    const auto& f = l4.colorings[bad->first];
    const auto& g = l4.colorings[bad->second];
    Coloring fg(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) fg[i] = s.op(f[i], g[i]);
    CHECK_FALSE(std::binary_search(l4.colorings.begin(), l4.colorings.end(), fg));
    try {
      pointwise_quandle(l4.colorings, s);
      FAIL("accepted a non-abelian target");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::TargetNotAbelian);
    }
  }

  TEST_CASE("pointwise structure on a list that is not closed") {
    const std::vector<Coloring> maps{{0, 0}, {1, 1}};
    try {
      pointwise_quandle(maps, qtest::dihedral3());
      FAIL("closed a list missing (3, 3)");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::ClosureFailure);
      CHECK(e.witness() == std::vector<std::size_t>{0, 1});
    }
    const std::vector<Coloring> closed{{0, 0}, {1, 1}, {2, 2}};
    CHECK(pointwise_quandle(closed, qtest::dihedral3()) == qtest::dihedral3());
  }

  TEST_CASE("hom quandles inherit abelian and involutory") {
    for (const auto& q : abelian_targets())
      for (const auto* name : kLinks) {
        const auto h = hom(name, q);
        CHECK(is_abelian(h.structure));
        if (is_involutory(q)) CHECK(is_involutory(h.structure));
      }
  }

  TEST_CASE("relabelling the target gives an isomorphic hom quandle") {
    const auto a = qtest::catalog().quandle("A_sec6");
    const auto base = hom("L5a1", a).structure;
    for (const auto& p : qtest::permutations(4)) CHECK(find_isomorphism(base, hom("L5a1", relabel(a, p)).structure));
  }

  TEST_CASE("trivial targets give trivial hom quandles") {
    const auto h = hom("L6a5", trivial_quandle(2));
    CHECK(h.structure == trivial_quandle(8));
  }

  TEST_CASE("the target embeds by constant colorings") {
    for (const auto& q : abelian_targets())
      for (const auto* name : kLinks) {
        const auto h = hom(name, q);
        const auto e = constant_embedding(h);
        CHECK(is_quandle_homomorphism(q, h.structure, e));
        CHECK(std::set<Element>(e.begin(), e.end()).size() == q.order());
      }
  }

  TEST_CASE("colorings embed in a power of the target") {
    for (const auto& q : abelian_targets())
      for (const auto* name : kLinks) {
        const auto h = hom(name, q);
        const auto c = std::max<std::size_t>(h.free_generators.size(), 1);
        std::vector<std::uint32_t> gens;
        const auto e = embed_in_power(h, c, &gens);
        CHECK(gens.size() == c);
        CHECK(is_quandle_homomorphism(h.structure, power_quandle(q, c), e));
        CHECK(std::set<Element>(e.begin(), e.end()).size() == h.structure.order());
      }
    const auto h = hom("3_1", qtest::dihedral3());
    try {
      embed_in_power(h, 1);
      FAIL("embedded 9 colorings in 3 elements");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::GeneratorSetTooSmall);
    }
  }

  TEST_CASE("maps out of a one-element quandle recover the target") {
    for (const auto& q : abelian_targets()) {
      const auto h = hom_quandle_from_finite(trivial_quandle(1), q);
      CHECK(h.structure == q);
    }
  }

  TEST_CASE("biquandle hom structure") {
    const auto b = alexander_biquandle(5, 2, 3);
    const auto h = hom_biquandle(colorings("L4a1", b));
    CHECK(h.structure.order() == 25);
    CHECK(is_abelian_biquandle(h.structure));
    const auto s = hom_biquandle(colorings("3_1", Structure{qtest::catalog().biquandle("swap2")}));
    CHECK(s.structure.order() == 2);
  }
}

TEST_SUITE("category") {
  TEST_CASE("bihomomorphism counts") {
    const auto t2 = trivial_quandle(2);
    CHECK(enumerate_bihomomorphisms(t2, t2, t2).size() == 16);
    const auto one = trivial_quandle(1);
    for (const auto& q : abelian_targets()) CHECK(enumerate_bihomomorphisms(q, q, one).size() == 1);
  }

  TEST_CASE("bihomomorphisms agree with brute force") {
    const auto r3 = qtest::dihedral3();
    const auto q2 = qtest::q2();
    const auto t2 = trivial_quandle(2);
    for (const auto& [q, a, x] : std::vector<std::tuple<Quandle, Quandle, Quandle>>{
             {r3, r3, r3}, {r3, t2, r3}, {q2, r3, r3}, {t2, q2, q2}, {r3, q2, q2}})
      CHECK(enumerate_bihomomorphisms(q, a, x) == reference::bihomomorphisms_brute_force(q, a, x));
  }

  TEST_CASE("currying is an isomorphism") {
    const auto r3 = qtest::dihedral3();
    const auto q2 = qtest::q2();
    const auto t2 = trivial_quandle(2);
    const auto w = check_adjunction(r3, q2, r3);
    CHECK(w.bihomomorphisms == w.homomorphisms);
    CHECK(w.curry.size() == w.bihomomorphisms);
    CHECK(check_adjunction(t2, t2, t2).bihomomorphisms == 16);
    CHECK(check_adjunction(r3, r3, r3).bihomomorphisms == enumerate_bihomomorphisms(r3, r3, r3).size());
  }

  TEST_CASE("unit law and symmetry") {
    for (const auto& a : abelian_targets())
      for (const auto& x : abelian_targets()) {
        if (a.order() * x.order() > 12) continue;
        CHECK(unit_law_holds(a, x));
        CHECK(swap_symmetry_holds(qtest::q2(), a, x));
      }
  }

  TEST_CASE("non-abelian arguments are refused") {
    const auto s = qtest::symplectic4();
    const auto r3 = qtest::dihedral3();
    for (const auto& [q, a, x] : std::vector<std::tuple<Quandle, Quandle, Quandle>>{{s, r3, r3}, {r3, s, r3}, {r3, r3, s}}) {
      try {
        enumerate_bihomomorphisms(q, a, x);
        FAIL("accepted a non-abelian argument");
      } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::NotAbelian);
      }
    }
  }
}
