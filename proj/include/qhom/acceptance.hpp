#pragma once

// End-to-end acceptance checks against the shipped catalog. Shared by the
// `qhom selftest` command and the standalone acceptance runner.

#include "qhom/catalog.hpp"

#include <functional>
#include <string>
#include <vector>

namespace qhom::acceptance {

struct Criterion {
  int id;
  std::string title;
  /// Tags usable with --filter, e.g. "quandle", "biquandle", "hom".
  std::vector<std::string> groups;
  double limit_ms;
  /// Throws on failure; returns a one-line summary on success.
  std::function<std::string(const Catalog&)> run;
};

struct Outcome {
  int id;
  std::string title;
  bool passed;
  std::string detail;
  double elapsed_ms;
  double limit_ms;
};

const std::vector<Criterion>& criteria();

/// Matches a criterion id, a group tag, or a substring of the title.
bool matches(const Criterion& c, const std::string& filter);

Outcome run(const Criterion& c, const Catalog& catalog);

/// "PASS  3  title  (1.2 ms / 100 ms)  detail"
std::string format(const Outcome& o);

}  // namespace qhom::acceptance
