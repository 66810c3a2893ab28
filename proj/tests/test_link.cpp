#include "support.hpp"

#include "qhom/error.hpp"
#include "qhom/pd_code.hpp"
#include "qhom/presentation.hpp"
#include "qhom/table_io.hpp"

#include <doctest.h>

using namespace qhom;

namespace {

template <class F>
ErrorCode code_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error raised");
  return ErrorCode::FormatError;
}

template <class F>
std::pair<std::size_t, std::size_t> position_of(F&& f) {
  try {
    f();
  } catch (const ParseError& e) {
    return {e.line(), e.column()};
  }
  FAIL("no parse error raised");
  return {};
}

}  // namespace

TEST_SUITE("table_io") {
  TEST_CASE("quandle round trip") {
    for (const auto& q : {qtest::dihedral3(), qtest::symplectic4(), qtest::q2(), qtest::a4()}) {
      const auto text = write_quandle(q, "round trip");
      CHECK(read_quandle(text) == q);
    }
  }

  TEST_CASE("biquandle round trip") {
    const auto b = alexander_biquandle(5, 2, 3);
    CHECK(read_biquandle(write_biquandle(b)) == b);
    CHECK(std::holds_alternative<Biquandle>(read_structure(write_structure(Structure{b}))));
  }

  TEST_CASE("comments and blank lines") {
    const auto q = read_quandle("# d3\n\nquandle  # header\n3\n1 3 2\n\n3 2 1\n2 1 3 # last\n");
    CHECK(q == qtest::dihedral3());
  }

  TEST_CASE("format errors carry a position") {
    CHECK(position_of([] { parse_table("quandle\n3\n1 3 2\n3 2\n2 1 3\n"); }) ==
          std::pair<std::size_t, std::size_t>{4, 4});
    CHECK(position_of([] { parse_table("quandle\n3\n1 3 2\n3 2 1\n"); }).first == 5);
    CHECK(position_of([] { parse_table("quandle\n2\n1 x\n2 2\n"); }) ==
          std::pair<std::size_t, std::size_t>{3, 3});
    CHECK(position_of([] { parse_table("rack\n2\n1 1\n2 2\n"); }) ==
          std::pair<std::size_t, std::size_t>{1, 1});
    CHECK(code_of([] { parse_table("quandle\n2\n1 3\n2 2\n"); }) == ErrorCode::EntryOutOfRange);
    CHECK(position_of([] { parse_table("quandle\n2\n1 3\n2 2\n"); }) ==
          std::pair<std::size_t, std::size_t>{3, 3});
    CHECK(code_of([] { parse_table("quandle\n2\n1 1\n2 2\n1 1\n"); }) == ErrorCode::FormatError);
  }

  TEST_CASE("axiom failures are not format errors") {
    CHECK(code_of([] { read_quandle("quandle\n2\n2 1\n1 2\n"); }) == ErrorCode::NotIdempotent);
    CHECK(!is_axiom_failure(ErrorCode::FormatError));
    CHECK(is_axiom_failure(ErrorCode::NotIdempotent));
  }
}

TEST_SUITE("link") {
  TEST_CASE("parse accepts both bracket styles, signs and loops") {
    const auto pd = parse_pd("X[1,4,2,5] X+(3,6,4,1)\n# comment\nX-(5,2,6,3)");
    REQUIRE(pd.crossings.size() == 3);
    CHECK(pd.crossings[0].edges == std::array<unsigned, 4>{1, 4, 2, 5});
    CHECK(pd.crossings[0].sign == 0);
    CHECK(pd.crossings[1].sign == 1);
    CHECK(pd.crossings[2].sign == -1);
    CHECK(pd.crossings[2].line == 3);
    const auto loop = parse_pd("O(1)");
    CHECK(loop.crossings.empty());
    CHECK(loop.free_loops == std::vector<unsigned>{1});
    CHECK(parse_pd(format_pd(pd)).crossings.size() == 3);
  }

  TEST_CASE("parse errors") {
    CHECK(code_of([] { parse_pd("X(1,2,3)"); }) == ErrorCode::ArityError);
    CHECK(code_of([] { parse_pd("X(1,2,3,4,5)"); }) == ErrorCode::ArityError);
    CHECK(code_of([] { parse_pd("Y(1,2,1,2)"); }) == ErrorCode::SyntaxError);
    CHECK(code_of([] { parse_pd("X(1,2,1,2"); }) == ErrorCode::SyntaxError);
    CHECK(code_of([] { parse_pd("X(1,4,2,5) X(3,6,4,1) X(5,2,6,6)"); }) ==
          ErrorCode::EdgeMultiplicityError);
    CHECK(code_of([] { parse_pd("X(1,2,1,9)"); }) == ErrorCode::EdgeMultiplicityError);
    CHECK(code_of([] { parse_pd("O(1) O(1)"); }) == ErrorCode::EdgeMultiplicityError);
    CHECK(code_of([] { parse_pd("X(1,1,2,2) O(2)"); }) == ErrorCode::EdgeMultiplicityError);
    CHECK(position_of([] { parse_pd("X(1,4,2,5)\n  X(3,6,4)"); }) ==
          std::pair<std::size_t, std::size_t>{2, 3});
  }

  TEST_CASE("trefoil crossings share one handedness") {
    const auto pd = infer_signs(qtest::catalog().link("3_1"));
    REQUIRE(pd.signs_resolved());
    for (const auto& c : pd.crossings) CHECK(c.sign == pd.crossings[0].sign);
    CHECK(pd.crossings[0].sign == -1);
  }

  TEST_CASE("explicit signs are kept") {
    const auto pd = infer_signs(parse_pd("X+(1,4,2,5) X(3,6,4,1) X(5,2,6,3)"));
    CHECK(pd.crossings[0].sign == 1);
    CHECK(pd.crossings[1].sign == -1);
  }

  TEST_CASE("kink signs") {
    CHECK(infer_signs(qtest::catalog().link("3_1_kink")).crossings[3].sign == 1);
    CHECK(infer_signs(qtest::catalog().link("3_1_kink_neg")).crossings[3].sign == -1);
  }

  TEST_CASE("two-edge components") {
    const auto hopf = infer_signs(parse_pd("X(4,1,3,2) X(2,3,1,4)"));
    CHECK(hopf.signs_resolved());
    CHECK(edge_components(hopf).count == 2);
    // The component {3, 4} never passes under, so its direction is unknown.
    CHECK(code_of([] { infer_signs(parse_pd("X(1,3,2,4) X(2,4,1,3)")); }) ==
          ErrorCode::OrientationAmbiguous);
  }

  TEST_CASE("components") {
    CHECK(edge_components(qtest::catalog().link("3_1")).count == 1);
    for (const auto* name : {"L4a1", "L5a1", "L6a1"})
      CHECK(edge_components(qtest::catalog().link(name)).count == 2);
    CHECK(edge_components(qtest::catalog().link("L6a5")).count == 3);
    const auto ec = edge_components(qtest::catalog().link("3_1"));
    CHECK(ec.successor == std::vector<unsigned>{2, 3, 4, 5, 6, 1});
  }

  TEST_CASE("presentation sizes") {
    const auto& cat = qtest::catalog();
    auto q = quandle_presentation(cat.link("3_1"));
    CHECK(q.generator_count() == 3);
    CHECK(q.relations.size() == 3);
    auto b = biquandle_presentation(cat.link("3_1"));
    CHECK(b.generator_count() == 6);
    CHECK(b.relations.size() == 6);
    q = quandle_presentation(cat.link("unknot"));
    CHECK(q.generator_count() == 1);
    CHECK(q.relations.empty());
    q = quandle_presentation(cat.link("L6a1"));
    CHECK(q.generator_count() == 6);
    CHECK(q.relations.size() == 6);
    CHECK(q.component_count == 2);
    b = biquandle_presentation(cat.link("L4a1"));
    CHECK(b.generator_count() == 8);
    CHECK(b.relations.size() == 8);
    CHECK(b.kind == PresentationKind::Biquandle);
  }

  TEST_CASE("arcs partition the edges") {
    const auto q = quandle_presentation(qtest::catalog().link("L6a5"));
    std::vector<int> seen(12, 0);
    for (const auto& g : q.generators)
      for (auto e : g) ++seen[e - 1];
    CHECK(std::all_of(seen.begin(), seen.end(), [](int k) { return k == 1; }));
  }

  TEST_CASE("mirror swaps the relation operations") {
    const auto pd = qtest::catalog().link("3_1");
    const auto a = quandle_presentation(pd);
    const auto m = quandle_presentation(pd, true);
    for (std::size_t i = 0; i < a.relations.size(); ++i)
      CHECK(a.relations[i].op != m.relations[i].op);
    const auto b = biquandle_presentation(pd);
    CHECK(b.relations[0].op == RelationOp::BInv1);
    CHECK(biquandle_presentation(pd, true).relations[0].op == RelationOp::B1);
  }
}
