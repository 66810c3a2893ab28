#include "qhom/polynomial.hpp"
#include "qhom/report.hpp"

#include <doctest.h>

using namespace qhom;

TEST_SUITE("report") {
  TEST_CASE("polynomial text") {
    TwoVariablePolynomial p;
    p.add_term(77, 68, 4);
    p.add_term(77, 77, 12);
    CHECK(p.to_string() == "12 s^77 t^77 + 4 s^77 t^68");
    CHECK(TwoVariablePolynomial::parse(p.to_string()) == p);
    CHECK(TwoVariablePolynomial::parse("12s^77t^77 + 4s^77t^68") == p);
    CHECK(p.total() == 16);
    CHECK(TwoVariablePolynomial{}.to_string() == "0");
    p.add_term(77, 68);
    CHECK(p.coefficient(77, 68) == 5);
  }

  TEST_CASE("FNV-1a test vectors") {
    CHECK(fnv1a_hex("") == "cbf29ce484222325");
    CHECK(fnv1a_hex("a") == "af63dc4c8601ec8c");
    CHECK(fnv1a_hex("foobar") == "85944171f73967e8");
  }

  TEST_CASE("JSON round trip") {
    Report r;
    r.command = "hom";
    r.inputs = {{"link", "L6a1", fnv1a_hex("x")}, {"target", "A_sec6", fnv1a_hex("y")}};
    r.values = {{"count", 16}, {"order", 16}};
    r.flags = {{"abelian", true}, {"mirror", false}};
    r.polynomial = TwoVariablePolynomial::parse("16 s^4 t^4");
    r.table = "quandle\n1\n1\n";
    r.colorings = std::vector<std::vector<std::uint32_t>>{{1, 2}, {2, 1}};
    r.iso = IsoVerdict{true, {2, 1}};
    r.messages = {"ok"};
    const auto text = to_json(r);
    CHECK(text.back() == '\n');
    CHECK(report_from_json(text) == r);
    CHECK(to_json(report_from_json(text)) == text);
    r.timing_ms = 1.5;
    CHECK(report_from_json(to_json(r)) == r);
  }

  TEST_CASE("JSON is independent of insertion order") {
    Report a, b;
    a.command = b.command = "color";
    a.values["b"] = 1;
    a.values["a"] = 2;
    b.values["a"] = 2;
    b.values["b"] = 1;
    CHECK(to_json(a) == to_json(b));
    CHECK(to_json(a).find("\"a\"") < to_json(a).find("\"b\""));
  }
}
