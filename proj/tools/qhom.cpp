// qhom: command-line front end for the quandle / biquandle engine.
//
//   qhom validate FILE|NAME
//   qhom color LINK TARGET [--bi] [--mirror] [--emit count|list]
//   qhom hom LINK TARGET [--bi] [--mirror] [--poly] [--out FILE]
//   qhom poly FILE|NAME
//   qhom iso A B
//   qhom catalog list
//   qhom selftest [--filter TAG]
//
// Common flags: --json, --timing, --data DIR. Exit codes: 0 success,
// 1 axiom failure or failed computation, 2 malformed input or usage.

#include "qhom/acceptance.hpp"
#include "qhom/catalog.hpp"
#include "qhom/coloring.hpp"
#include "qhom/error.hpp"
#include "qhom/hom_construct.hpp"
#include "qhom/report.hpp"
#include "qhom/table_io.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>

namespace {

using namespace qhom;

struct Common {
  bool json = false;
  bool timing = false;
  std::string data;
};

struct Stopwatch {
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  double ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
        .count();
  }
};

Catalog load_catalog(const Common& common) {
  return Catalog::load(common.data.empty() ? default_data_dir() : std::filesystem::path(common.data));
}

ReportInput input_record(const std::string& role, const ResolvedInput& in) {
  return {role, in.name, fnv1a_hex(in.text)};
}

std::vector<std::vector<std::uint32_t>> one_based(const std::vector<Coloring>& cs) {
  std::vector<std::vector<std::uint32_t>> out;
  out.reserve(cs.size());
  for (const auto& c : cs) {
    std::vector<std::uint32_t> row(c.begin(), c.end());
    for (auto& v : row) ++v;
    out.push_back(std::move(row));
  }
  return out;
}

void emit(const Report& r, const Common& common, const std::string& text) {
  if (common.json)
    std::cout << to_json(r);
  else
    std::cout << text;
}

LinkPresentation presentation_for(const PDCode& pd, bool bi, bool mirror) {
  return bi ? biquandle_presentation(pd, mirror) : quandle_presentation(pd, mirror);
}

int cmd_validate(const Common& common, const std::string& arg) {
  const auto catalog = load_catalog(common);
  const auto in = resolve_input(catalog, arg);
  Report r;
  r.command = "validate";
  r.inputs.push_back(input_record("table", in));
  RawTable raw;
  try {
    raw = parse_table(in.text);
  } catch (const ParseError& e) {
    r.flags["valid"] = false;
    r.messages.push_back(e.what());
    emit(r, common, std::string("format error: ") + e.what() + "\n");
    return 2;
  }
  r.values["order"] = static_cast<std::int64_t>(raw.order);
  std::ostringstream text;
  try {
    if (raw.kind == StructureKind::Quandle) {
      const auto q = Quandle::validate(Table(raw.order, raw.entries));
      const auto& ab = q.abelian_check();
      r.flags = {{"valid", true}, {"abelian", ab.abelian}, {"involutory", q.involutory()},
                 {"commutative", q.commutative()}};
      text << in.name << ": valid quandle of order " << q.order() << "\n"
           << "  abelian:     " << (ab.abelian ? "yes" : "no") << "\n";
      if (ab.witness) {
        const auto [x, y, z, w] = *ab.witness;
        const auto lhs = q.op(q.op(x, y), q.op(z, w));
        const auto rhs = q.op(q.op(x, z), q.op(y, w));
        std::ostringstream m;
        m << "(" << x + 1 << "▷" << y + 1 << ")▷(" << z + 1 << "▷" << w + 1 << ") = " << lhs + 1
          << " ≠ " << rhs + 1 << " = (" << x + 1 << "▷" << z + 1 << ")▷(" << y + 1 << "▷"
          << w + 1 << ")";
        r.messages.push_back("medial law fails: " + m.str());
        text << "    witness: " << m.str() << "\n";
      }
      text << "  involutory:  " << (q.involutory() ? "yes" : "no") << "\n"
           << "  commutative: " << (q.commutative() ? "yes" : "no") << "\n";
    } else {
      const auto b = Biquandle::validate(raw.order, raw.entries);
      const auto ab = is_abelian_biquandle(b);
      r.flags = {{"valid", true}, {"abelian", ab.abelian}};
      text << in.name << ": valid biquandle of order " << b.order() << "\n"
           << "  abelian: " << (ab.abelian ? "yes" : "no") << "\n";
      if (ab.witness) {
        std::vector<std::size_t> w(ab.witness->begin(), ab.witness->end());
        const auto m = "equation " + std::to_string(ab.equation) + " fails at (a, b, x, y) = " +
                       format_elements(w);
        r.messages.push_back(m);
        text << "    witness: " << m << "\n";
      }
    }
  } catch (const Error& e) {
    r.flags["valid"] = false;
    r.messages.push_back(e.what());
    emit(r, common, in.name + ": invalid: " + e.what() + "\n");
    return 1;
  }
  emit(r, common, text.str());
  return 0;
}

int cmd_color(const Common& common, const std::string& link, const std::string& target, bool bi,
              bool mirror, const std::string& mode) {
  const auto catalog = load_catalog(common);
  const auto lin = resolve_input(catalog, link);
  const auto tin = resolve_input(catalog, target);
  const auto pd = parse_pd(lin.text);
  const auto t = read_structure(tin.text);
  const Stopwatch clock;
  const auto set = enumerate_colorings(presentation_for(pd, bi, mirror), t);
  Report r;
  r.command = "color";
  r.inputs = {input_record("link", lin), input_record("target", tin)};
  r.values = {{"count", static_cast<std::int64_t>(set.size())},
              {"generators", static_cast<std::int64_t>(set.presentation.generator_count())}};
  r.flags = {{"mirror", mirror}, {"biquandle", bi}};
  std::ostringstream text;
  text << set.size() << "\n";
  if (mode == "list") {
    r.colorings = one_based(set.colorings);
    for (const auto& c : *r.colorings) {
      for (std::size_t i = 0; i < c.size(); ++i) text << (i ? " " : "") << c[i];
      text << "\n";
    }
  }
  if (common.timing) {
    r.timing_ms = clock.ms();
    text << "time: " << *r.timing_ms << " ms\n";
  }
  emit(r, common, text.str());
  return 0;
}

int cmd_hom(const Common& common, const std::string& link, const std::string& target, bool bi,
            bool mirror, bool poly_only, const std::string& out) {
  const auto catalog = load_catalog(common);
  const auto lin = resolve_input(catalog, link);
  const auto tin = resolve_input(catalog, target);
  const auto pd = parse_pd(lin.text);
  const auto t = read_structure(tin.text);
  const Stopwatch clock;
  const auto set = enumerate_colorings(presentation_for(pd, bi, mirror), t);
  Report r;
  r.command = "hom";
  r.inputs = {input_record("link", lin), input_record("target", tin)};
  r.flags = {{"mirror", mirror}, {"biquandle", bi}};
  r.values["count"] = static_cast<std::int64_t>(set.size());
  std::string table;
  const auto comment = "hom of " + lin.name + " over " + tin.name;
  if (bi) {
    const auto h = hom_biquandle(set);
    r.polynomial = upper_biquandle_polynomial(h.structure);
    r.flags["abelian"] = is_abelian_biquandle(h.structure).abelian;
    table = write_biquandle(h.structure, comment);
  } else {
    const auto h = hom_quandle(set);
    r.polynomial = quandle_polynomial(h.structure);
    r.flags["abelian"] = is_abelian(h.structure).abelian;
    r.flags["involutory"] = is_involutory(h.structure);
    r.flags["commutative"] = is_commutative(h.structure);
    table = write_quandle(h.structure, comment);
  }
  r.flags["valid"] = true;
  r.table = table;
  if (!out.empty()) {
    std::ofstream f(out);
    if (!f) throw Error(ErrorCode::FormatError, "cannot write " + out);
    f << table;
  }
  std::ostringstream text;
  if (poly_only) {
    text << r.polynomial->to_string() << "\n";
  } else {
    text << "count: " << set.size() << "\n"
         << "polynomial: " << r.polynomial->to_string() << "\n"
         << "valid: yes, abelian: " << (r.flags["abelian"] ? "yes" : "no") << "\n"
         << table;
  }
  if (common.timing) {
    r.timing_ms = clock.ms();
    text << "time: " << *r.timing_ms << " ms\n";
  }
  emit(r, common, text.str());
  return 0;
}

int cmd_poly(const Common& common, const std::string& arg) {
  const auto catalog = load_catalog(common);
  const auto in = resolve_input(catalog, arg);
  const auto s = read_structure(in.text);
  Report r;
  r.command = "poly";
  r.inputs.push_back(input_record("table", in));
  r.values["order"] = static_cast<std::int64_t>(order(s));
  r.polynomial = std::visit(
      [](const auto& v) {
        if constexpr (std::is_same_v<std::decay_t<decltype(v)>, Quandle>)
          return quandle_polynomial(v);
        else
          return upper_biquandle_polynomial(v);
      },
      s);
  emit(r, common, r.polynomial->to_string() + "\n");
  return 0;
}

int cmd_iso(const Common& common, const std::string& a, const std::string& b) {
  const auto catalog = load_catalog(common);
  const auto ain = resolve_input(catalog, a);
  const auto bin = resolve_input(catalog, b);
  const auto sa = read_structure(ain.text);
  const auto sb = read_structure(bin.text);
  if (sa.index() != sb.index())
    throw Error(ErrorCode::KindMismatch, std::string("cannot compare a ") +
                                             std::string(kind_name(sa)) + " with a " +
                                             std::string(kind_name(sb)));
  std::optional<std::vector<Element>> f;
  if (const auto* q = std::get_if<Quandle>(&sa))
    f = find_isomorphism(*q, std::get<Quandle>(sb));
  else
    f = find_biquandle_isomorphism(std::get<Biquandle>(sa), std::get<Biquandle>(sb));
  Report r;
  r.command = "iso";
  r.inputs = {input_record("a", ain), input_record("b", bin)};
  IsoVerdict v;
  v.isomorphic = f.has_value();
  std::ostringstream text;
  if (f) {
    for (auto x : *f) v.bijection.push_back(x + 1);
    text << "isomorphic\n";
    for (std::size_t i = 0; i < v.bijection.size(); ++i)
      text << (i ? " " : "") << i + 1 << "->" << v.bijection[i];
    text << "\n";
  } else {
    text << "NOT isomorphic\n";
  }
  r.iso = v;
  emit(r, common, text.str());
  return 0;
}

int cmd_catalog_list(const Common& common) {
  const auto catalog = load_catalog(common);
  Report r;
  r.command = "catalog list";
  std::ostringstream text;
  for (const auto& e : catalog.entries()) {
    std::string status = "ok";
    try {
      const auto body = read_text_file(catalog.full_path(e));
      r.inputs.push_back({std::string(to_string(e.kind)), e.name, fnv1a_hex(body)});
      if (e.kind == EntryKind::Link)
        (void)quandle_presentation(parse_pd(body));
      else
        (void)read_structure(body);
    } catch (const Error& err) {
      status = std::string(to_string(err.code()));
      r.messages.push_back(e.name + ": " + err.what());
    }
    r.flags[e.name] = status == "ok";
    char line[64];
    std::snprintf(line, sizeof line, "%-20s %-10s ", e.name.c_str(),
                  std::string(to_string(e.kind)).c_str());
    text << line << status << "  " << e.note << "\n";
  }
  emit(r, common, text.str());
  return 0;
}

int cmd_selftest(const Common& common, const std::string& filter) {
  const auto catalog = load_catalog(common);
  Report r;
  r.command = "selftest";
  std::ostringstream text;
  int failed = 0;
  for (const auto& c : acceptance::criteria()) {
    if (!acceptance::matches(c, filter)) continue;
    const auto o = acceptance::run(c, catalog);
    r.flags["criterion " + std::to_string(o.id)] = o.passed;
    r.messages.push_back(acceptance::format(o));
    text << acceptance::format(o) << "\n";
    failed += !o.passed;
  }
  r.values["failed"] = failed;
  emit(r, common, text.str());
  return std::min(failed, 100);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite quandle and biquandle engine: colorings, hom quandles, polynomials"};
  app.require_subcommand(1);
  Common common;
  app.add_flag("--json", common.json, "Machine-readable report");
  app.add_flag("--timing", common.timing, "Include wall-clock timing");
  app.add_option("--data", common.data, "Catalog directory");

  std::string a, b, emit_mode = "count", filter, out;
  bool bi = false, mirror = false, poly_only = false;

  auto* validate = app.add_subcommand("validate", "Check a quandle or biquandle table");
  validate->add_option("table", a, "Catalog name or file")->required();

  auto* color = app.add_subcommand("color", "Count or list colorings of a link");
  color->add_option("link", a, "Catalog name or PD file")->required();
  color->add_option("target", b, "Catalog name or table file")->required();
  color->add_flag("--bi", bi, "Biquandle (semiarc) colorings");
  color->add_flag("--mirror", mirror, "Swap the crossing sign interpretation");
  color->add_option("--emit", emit_mode, "count or list")->check(CLI::IsMember({"count", "list"}));

  auto* hom = app.add_subcommand("hom", "Hom quandle / biquandle of a link over a target");
  hom->add_option("link", a, "Catalog name or PD file")->required();
  hom->add_option("target", b, "Catalog name or table file")->required();
  hom->add_flag("--bi", bi, "Hom biquandle");
  hom->add_flag("--mirror", mirror, "Swap the crossing sign interpretation");
  hom->add_flag("--poly", poly_only, "Print only the polynomial");
  hom->add_option("--out", out, "Also write the table to this file");

  auto* poly = app.add_subcommand("poly", "Quandle or upper biquandle polynomial");
  poly->add_option("table", a, "Catalog name or file")->required();

  auto* iso = app.add_subcommand("iso", "Isomorphism test");
  iso->add_option("a", a, "Catalog name or file")->required();
  iso->add_option("b", b, "Catalog name or file")->required();

  auto* catalog = app.add_subcommand("catalog", "Shipped data");
  catalog->require_subcommand(1);
  auto* list = catalog->add_subcommand("list", "List catalog entries and their status");

  auto* selftest = app.add_subcommand("selftest", "Run the acceptance criteria");
  selftest->add_option("--filter", filter, "Criterion number, tag or title substring");

  for (auto* sub : {validate, color, hom, poly, iso, list, selftest}) {
    sub->add_flag("--json", common.json, "Machine-readable report");
    sub->add_flag("--timing", common.timing, "Include wall-clock timing");
    sub->add_option("--data", common.data, "Catalog directory");
  }

  CLI11_PARSE(app, argc, argv);

  try {
    if (*validate) return cmd_validate(common, a);
    if (*color) return cmd_color(common, a, b, bi, mirror, emit_mode);
    if (*hom) return cmd_hom(common, a, b, bi, mirror, poly_only, out);
    if (*poly) return cmd_poly(common, a);
    if (*iso) return cmd_iso(common, a, b);
    if (*list) return cmd_catalog_list(common);
    if (*selftest) return cmd_selftest(common, filter);
  } catch (const ParseError& e) {
    std::cerr << "format error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.code() == ErrorCode::FormatError || e.code() == ErrorCode::SyntaxError ||
                   e.code() == ErrorCode::ArityError ||
                   e.code() == ErrorCode::EdgeMultiplicityError
               ? 2
               : 1;
  }
  return 0;
}
