// Acceptance runner: one PASS/FAIL line per criterion.
//   qhom_acceptance [--only N] [--filter TAG] [--data DIR]

#include "qhom/acceptance.hpp"

#include <CLI11.hpp>

#include <iostream>

int main(int argc, char** argv) {
  CLI::App app{"qhom acceptance criteria"};
  int only = 0;
  std::string filter;
  std::string data = qhom::default_data_dir().string();
  app.add_option("--only", only, "Run a single criterion by number");
  app.add_option("--filter", filter, "Run criteria matching a tag or title substring");
  app.add_option("--data", data, "Catalog directory");
  CLI11_PARSE(app, argc, argv);

  const auto catalog = qhom::Catalog::load(data);
  int failed = 0;
  int ran = 0;
  for (const auto& c : qhom::acceptance::criteria()) {
    if (only != 0 && c.id != only) continue;
    if (!filter.empty() && !qhom::acceptance::matches(c, filter)) continue;
    const auto outcome = qhom::acceptance::run(c, catalog);
    std::cout << qhom::acceptance::format(outcome) << std::endl;
    failed += !outcome.passed;
    ++ran;
  }
  if (ran == 0) {
    std::cerr << "no criteria selected\n";
    return 2;
  }
  std::cout << (ran - failed) << "/" << ran << " criteria passed\n";
  return failed == 0 ? 0 : 1;
}
