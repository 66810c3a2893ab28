#include "qhom/table_io.hpp"

#include "qhom/error.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>

namespace qhom {

namespace {

struct Token {
  std::string_view text;
  std::size_t line;
  std::size_t column;
};

/// Non-empty lines with comments stripped, split into tokens.
std::vector<std::vector<Token>> tokenize(std::string_view text) {
  std::vector<std::vector<Token>> lines;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    ++line_no;
    auto line = text.substr(start, end - start);
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    std::vector<Token> tokens;
    std::size_t i = 0;
    while (i < line.size()) {
      while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
      const auto b = i;
      while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
      if (i > b) tokens.push_back({line.substr(b, i - b), line_no, b + 1});
    }
    if (!tokens.empty()) lines.push_back(std::move(tokens));
    if (end == text.size()) break;
    start = end + 1;
  }
  return lines;
}

std::size_t to_number(const Token& t) {
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), value);
  if (ec != std::errc() || ptr != t.text.data() + t.text.size())
    throw ParseError(ErrorCode::FormatError, t.line, t.column,
                     "expected a positive integer, found '" + std::string(t.text) + "'");
  return value;
}

std::size_t end_line(std::string_view text) {
  std::size_t lines = 1;
  for (char c : text) lines += c == '\n';
  return lines;
}

}  // namespace

RawTable parse_table(std::string_view text) {
  const auto lines = tokenize(text);
  const auto eof = end_line(text);
  if (lines.empty()) throw ParseError(ErrorCode::FormatError, eof, 1, "missing header");

  RawTable raw;
  const auto& header = lines[0];
  if (header.size() != 1 || (header[0].text != "quandle" && header[0].text != "biquandle"))
    throw ParseError(ErrorCode::FormatError, header[0].line, header[0].column,
                     "expected header 'quandle' or 'biquandle'");
  raw.kind = header[0].text == "quandle" ? StructureKind::Quandle : StructureKind::Biquandle;

  if (lines.size() < 2) throw ParseError(ErrorCode::FormatError, eof, 1, "missing order line");
  const auto& order_line = lines[1];
  if (order_line.size() != 1)
    throw ParseError(ErrorCode::FormatError, order_line[1].line, order_line[1].column,
                     "order line must hold a single integer");
  raw.order = to_number(order_line[0]);
  if (raw.order == 0)
    throw ParseError(ErrorCode::FormatError, order_line[0].line, order_line[0].column,
                     "order must be at least 1");

  const auto n = raw.order;
  const auto width = raw.kind == StructureKind::Quandle ? n : 2 * n;
  raw.entries.reserve(n * width);
  for (std::size_t r = 0; r < n; ++r) {
    if (lines.size() < r + 3)
      throw ParseError(ErrorCode::FormatError, eof, 1,
                       "expected " + std::to_string(n) + " rows, found " + std::to_string(r));
    const auto& row = lines[r + 2];
    if (row.size() != width) {
      const auto& at = row.size() > width ? row[width] : row.back();
      const auto column = row.size() > width ? at.column : at.column + at.text.size();
      throw ParseError(ErrorCode::FormatError, at.line, column,
                       "row " + std::to_string(r + 1) + " has " + std::to_string(row.size()) +
                           " entries, expected " + std::to_string(width));
    }
    for (const auto& t : row) {
      const auto v = to_number(t);
      if (v < 1 || v > n)
        throw ParseError(ErrorCode::EntryOutOfRange, t.line, t.column,
                         "entry " + std::string(t.text) + " outside 1.." + std::to_string(n));
      raw.entries.push_back(static_cast<Element>(v - 1));
    }
  }
  if (lines.size() > n + 2) {
    const auto& extra = lines[n + 2][0];
    throw ParseError(ErrorCode::FormatError, extra.line, extra.column, "unexpected trailing data");
  }
  return raw;
}

Structure read_structure(std::string_view text) {
  auto raw = parse_table(text);
  if (raw.kind == StructureKind::Quandle)
    return Quandle::validate(Table(raw.order, std::move(raw.entries)));
  return Biquandle::validate(raw.order, std::move(raw.entries));
}

Quandle read_quandle(std::string_view text) {
  auto s = read_structure(text);
  if (auto* q = std::get_if<Quandle>(&s)) return std::move(*q);
  throw Error(ErrorCode::KindMismatch, "expected a quandle file, found a biquandle");
}

Biquandle read_biquandle(std::string_view text) {
  auto s = read_structure(text);
  if (auto* b = std::get_if<Biquandle>(&s)) return std::move(*b);
  throw Error(ErrorCode::KindMismatch, "expected a biquandle file, found a quandle");
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::FormatError, "cannot open " + path.string());
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

namespace {

void write_comment(std::ostringstream& out, std::string_view comment) {
  std::size_t start = 0;
  while (start < comment.size()) {
    auto end = comment.find('\n', start);
    if (end == std::string_view::npos) end = comment.size();
    out << "# " << comment.substr(start, end - start) << '\n';
    start = end + 1;
  }
}

void write_rows(std::ostringstream& out, std::size_t rows, std::size_t width,
                const std::vector<Element>& entries) {
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < width; ++c) out << (c ? " " : "") << entries[r * width + c] + 1;
    out << '\n';
  }
}

}  // namespace

std::string write_quandle(const Quandle& q, std::string_view comment) {
  std::ostringstream out;
  write_comment(out, comment);
  out << "quandle\n" << q.order() << '\n';
  write_rows(out, q.order(), q.order(), q.table().entries());
  return out.str();
}

std::string write_biquandle(const Biquandle& b, std::string_view comment) {
  std::ostringstream out;
  write_comment(out, comment);
  out << "biquandle\n" << b.order() << '\n';
  write_rows(out, b.order(), 2 * b.order(), b.matrix());
  return out.str();
}

std::string write_structure(const Structure& s, std::string_view comment) {
  return std::visit(
      [&](const auto& v) {
        if constexpr (std::is_same_v<std::decay_t<decltype(v)>, Quandle>)
          return write_quandle(v, comment);
        else
          return write_biquandle(v, comment);
      },
      s);
}

}  // namespace qhom
