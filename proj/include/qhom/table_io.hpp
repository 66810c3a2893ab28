#pragma once

// Plain-text table files.
//
//   # optional comments
//   quandle            biquandle
//   3                  2
//   1 3 2              1 1 1 1
//   3 2 1              2 2 2 2
//   2 1 3
//
// Entries are 1-based. A biquandle row has 2n entries: the left block holds
// y^x at row y, column x; the right block holds x_y at row x, column n + y.
// Blank lines and text after `#` are ignored. Any other deviation raises a
// ParseError naming the line and column.

#include "qhom/structure.hpp"

#include <filesystem>
#include <string>
#include <string_view>

namespace qhom {

enum class StructureKind { Quandle, Biquandle };

/// Parsed but not yet validated: entries are 0-based, n×n or n×2n.
struct RawTable {
  StructureKind kind = StructureKind::Quandle;
  std::size_t order = 0;
  std::vector<Element> entries;
};

RawTable parse_table(std::string_view text);

/// Parses then validates; axiom failures throw Error, format problems ParseError.
Structure read_structure(std::string_view text);
Quandle read_quandle(std::string_view text);
Biquandle read_biquandle(std::string_view text);

std::string read_text_file(const std::filesystem::path& path);

std::string write_quandle(const Quandle& q, std::string_view comment = {});
std::string write_biquandle(const Biquandle& b, std::string_view comment = {});
std::string write_structure(const Structure& s, std::string_view comment = {});

}  // namespace qhom
