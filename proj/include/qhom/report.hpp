#pragma once

#include "qhom/polynomial.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace qhom {

struct ReportInput {
  std::string role;
  std::string name;
  /// FNV-1a 64-bit of the file contents, 16 hex digits.
  std::string hash;
  friend bool operator==(const ReportInput&, const ReportInput&) = default;
};

struct IsoVerdict {
  bool isomorphic = false;
  /// 1-based images when isomorphic.
  std::vector<std::uint32_t> bijection;
  friend bool operator==(const IsoVerdict&, const IsoVerdict&) = default;
};

/// Result of one CLI command. Everything except `timing_ms` is a pure
/// function of the inputs and flags.
struct Report {
  std::string command;
  std::vector<ReportInput> inputs;
  std::map<std::string, std::int64_t> values;
  std::map<std::string, bool> flags;
  std::optional<TwoVariablePolynomial> polynomial;
  /// Table in the text file format.
  std::optional<std::string> table;
  /// 1-based colorings.
  std::optional<std::vector<std::vector<std::uint32_t>>> colorings;
  std::optional<IsoVerdict> iso;
  std::vector<std::string> messages;
  std::optional<double> timing_ms;

  friend bool operator==(const Report&, const Report&) = default;
};

std::string fnv1a_hex(std::string_view bytes);

/// Keys sorted, two-space indent, trailing newline.
std::string to_json(const Report& r);
Report report_from_json(std::string_view text);

}  // namespace qhom
