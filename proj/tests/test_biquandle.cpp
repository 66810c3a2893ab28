#include "support.hpp"

#include "qhom/biquandle.hpp"
#include "qhom/error.hpp"

#include <doctest.h>

using namespace qhom;

namespace {

std::vector<Element> matrix_1(const std::vector<std::vector<int>>& rows) {
  std::vector<Element> m;
  for (const auto& r : rows)
    for (auto v : r) m.push_back(static_cast<Element>(v - 1));
  return m;
}

Biquandle swap(std::size_t n) {
  std::vector<Element> m(2 * n * n);
  for (Element i = 0; i < n; ++i)
    for (Element j = 0; j < n; ++j) m[i * 2 * n + j] = m[i * 2 * n + n + j] = i;
  return Biquandle::validate(n, m);
}

std::pair<ErrorCode, std::vector<std::size_t>> rejection(std::size_t n, std::vector<Element> m) {
  try {
    Biquandle::validate(n, std::move(m));
  } catch (const Error& e) {
    return {e.code(), e.witness()};
  }
  FAIL("matrix validated");
  return {};
}

Biquandle relabel(const Biquandle& b, const std::vector<Element>& p) {
  const auto n = b.order();
  std::vector<Element> m(2 * n * n);
  for (Element y = 0; y < n; ++y)
    for (Element x = 0; x < n; ++x) {
      m[p[y] * 2 * n + p[x]] = p[b.up(y, x)];
      m[p[y] * 2 * n + n + p[x]] = p[b.down(y, x)];
    }
  return Biquandle::validate(n, m);
}

}  // namespace

TEST_SUITE("biquandle") {
  TEST_CASE("swap map is a biquandle") {
    const auto b = swap(2);
    CHECK(b.map(0, 1) == std::pair<Element, Element>{1, 0});
    CHECK(b.sideways(0, 1) == std::pair<Element, Element>{1, 0});
    CHECK(b.diagonal(1) == 1);
  }

  TEST_CASE("matrix layout: B(i, j) = (M[j][i], M[i][j + n])") {
    const auto b = alexander_biquandle(5, 2, 3);
    const auto m = b.matrix();
    for (Element i = 0; i < 5; ++i)
      for (Element j = 0; j < 5; ++j) {
        CHECK(b.map(i, j).first == m[j * 10 + i]);
        CHECK(b.map(i, j).second == m[i * 10 + j + 5]);
      }
  }

  TEST_CASE("one changed entry in the swap table on 3 elements is rejected") {
    auto m = swap(3).matrix();
    m[1] = 1;  // left block, row 1, column 2: 1 -> 2
    const auto [code, witness] = rejection(3, m);
    CHECK(code == ErrorCode::BNotBijective);
    CHECK(witness == std::vector<std::size_t>{1, 0, 1, 1});
  }

  TEST_CASE("each axiom has a rejecting example") {
    CHECK(rejection(2, matrix_1({{2, 1, 2, 1}, {2, 1, 2, 1}})).first == ErrorCode::SidewaysConflict);
    CHECK(rejection(2, matrix_1({{1, 2, 2, 1}, {2, 1, 2, 1}})).first ==
          ErrorCode::SidewaysNotBijective);
    CHECK(rejection(2, matrix_1({{1, 2, 2, 2}, {2, 1, 1, 1}})).first == ErrorCode::DiagonalMismatch);
    const auto yb = rejection(3, matrix_1({{1, 3, 1, 1, 1, 1}, {3, 2, 2, 2, 2, 2}, {2, 1, 3, 3, 3, 3}}));
    CHECK(yb.first == ErrorCode::YangBaxterFailure);
    CHECK(yb.second == std::vector<std::size_t>{0, 1, 0});
    CHECK(rejection(2, matrix_1({{1, 1, 1, 3}, {2, 2, 2, 2}})).first == ErrorCode::EntryOutOfRange);
  }

  TEST_CASE("the catalog MX table fails the diagonal axiom at element 1") {
    const auto [code, witness] = rejection(
        5, matrix_1({{3, 3, 3, 1, 1, 1, 1, 1, 1, 1},
                     {1, 1, 1, 2, 2, 2, 2, 2, 2, 2},
                     {2, 2, 2, 3, 3, 3, 3, 3, 3, 3},
                     {5, 5, 5, 5, 5, 4, 4, 4, 5, 5},
                     {4, 4, 4, 4, 4, 5, 5, 5, 4, 4}}));
    CHECK(code == ErrorCode::DiagonalMismatch);
    CHECK(witness == std::vector<std::size_t>{0});
  }

  TEST_CASE("from_quandle") {
    const auto t = from_quandle(trivial_quandle(3));
    CHECK(t == swap(3));
    const auto d = from_quandle(qtest::dihedral3());
    CHECK(d.down(0, 1) == qtest::dihedral3().op(0, 1));
    const auto sp = is_abelian_biquandle(from_quandle(qtest::symplectic4()));
    CHECK_FALSE(sp.abelian);
    CHECK(sp.equation == 3);
  }

  TEST_CASE("from_quandle is abelian exactly when the quandle is") {
    for (const auto& e : qtest::catalog().entries()) {
      if (e.kind != EntryKind::Quandle) continue;
      const auto q = qtest::catalog().quandle(e.name);
      CHECK(is_abelian_biquandle(from_quandle(q)).abelian == is_abelian(q).abelian);
    }
  }

  TEST_CASE("Alexander biquandles") {
    CHECK(alexander_biquandle(4, 1, 1) == swap(4));
    CHECK(alexander_biquandle(5, 1, 3).order() == 5);
    try {
      alexander_biquandle(4, 2, 1);
      FAIL("accepted a non-unit");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::NonUnitParameter);
    }
    CHECK(is_abelian_biquandle(alexander_biquandle(5, 2, 3)).abelian);
  }

  TEST_CASE("all Alexander biquandles with n ≤ 6 are valid and abelian") {
    for (std::size_t n = 1; n <= 6; ++n)
      for (long long t = 0; t < static_cast<long long>(n); ++t)
        for (long long r = 0; r < static_cast<long long>(n); ++r) {
          if (std::gcd(t, static_cast<long long>(n)) != 1 || std::gcd(r, static_cast<long long>(n)) != 1)
            continue;
          const auto b = alexander_biquandle(n, t, r);
          CHECK(is_abelian_biquandle(b).abelian);
          CHECK(satisfies_fourth_abelian_condition(b));
        }
  }

  TEST_CASE("constant action biquandles use the inverse permutation") {
    const std::vector<Element> id{0, 1, 2};
    CHECK(constant_action_biquandle(id) == swap(3));
    const std::vector<Element> cycle{1, 2, 0};
    const auto b = constant_action_biquandle(cycle);
    CHECK(b.map(0, 0) == std::pair<Element, Element>{1, 2});
    // The same formula with σ in both slots is not a biquandle for a 3-cycle.
    std::vector<Element> m(18);
    for (Element i = 0; i < 3; ++i)
      for (Element j = 0; j < 3; ++j) {
        m[i * 6 + j] = cycle[i];
        m[i * 6 + 3 + j] = cycle[i];
      }
    CHECK_THROWS_AS(Biquandle::validate(3, m), Error);
    const std::vector<Element> bad{0, 0, 1};
    try {
      constant_action_biquandle(bad);
      FAIL("accepted a non-permutation");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::NotAPermutation);
    }
  }

  TEST_CASE("fourth abelian condition follows from the three listed ones") {
    for (const auto& e : qtest::catalog().entries()) {
      if (e.kind != EntryKind::Biquandle) continue;
      try {
        const auto b = qtest::catalog().biquandle(e.name);
        if (is_abelian_biquandle(b)) CHECK(satisfies_fourth_abelian_condition(b));
      } catch (const Error&) {
      }
    }
    for (const auto& q : qtest::all_quandles(3)) {
      const auto b = from_quandle(q);
      if (is_abelian_biquandle(b)) CHECK(satisfies_fourth_abelian_condition(b));
    }
  }

  TEST_CASE("upper polynomial") {
    CHECK(upper_biquandle_polynomial(swap(5)).to_string() == "5 s^5 t^5");
    const auto b = alexander_biquandle(5, 2, 3);
    for (const auto& p : qtest::permutations(5)) {
      const auto r = relabel(b, p);
      CHECK(upper_biquandle_polynomial(r) == upper_biquandle_polynomial(b));
    }
  }

  TEST_CASE("biquandle isomorphism") {
    const auto b = alexander_biquandle(5, 2, 3);
    const auto id = find_biquandle_isomorphism(b, b);
    REQUIRE(id);
    CHECK(*id == std::vector<Element>{0, 1, 2, 3, 4});
    const std::vector<Element> p{3, 0, 4, 1, 2};
    const auto f = find_biquandle_isomorphism(b, relabel(b, p));
    REQUIRE(f);
    CHECK(is_biquandle_homomorphism(b, relabel(b, p), *f));
    CHECK_FALSE(find_biquandle_isomorphism(swap(3), constant_action_biquandle(std::vector<Element>{1, 2, 0})));
    CHECK_FALSE(find_biquandle_isomorphism(swap(5), b));
  }
}
