#include "qhom/pd_code.hpp"

#include "qhom/error.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <sstream>

namespace qhom {

bool PDCode::signs_resolved() const noexcept {
  return std::all_of(crossings.begin(), crossings.end(),
                     [](const PDCrossing& x) { return x.sign != 0; });
}

namespace {

class Scanner {
 public:
  explicit Scanner(std::string_view text) : text_(text) {}

  void skip_space() {
    while (pos_ < text_.size()) {
      const char c = text_[pos_];
      if (c == '#') {
        while (pos_ < text_.size() && text_[pos_] != '\n') advance();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else {
        break;
      }
    }
  }

  bool done() const { return pos_ >= text_.size(); }
  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    ++pos_;
  }

  [[noreturn]] void fail(ErrorCode code, const std::string& what) const {
    throw ParseError(code, line_, column_, what);
  }

  void expect(char c) {
    if (peek() != c) fail(ErrorCode::SyntaxError, std::string("expected '") + c + "'");
    advance();
  }

  unsigned number() {
    if (!std::isdigit(static_cast<unsigned char>(peek())))
      fail(ErrorCode::SyntaxError, "expected an edge label");
    unsigned long long v = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      v = v * 10 + static_cast<unsigned>(peek() - '0');
      if (v > 1'000'000) fail(ErrorCode::SyntaxError, "edge label too large");
      advance();
    }
    return static_cast<unsigned>(v);
  }

  /// "(n, n, ...)" or "[n, n, ...]".
  std::vector<unsigned> arguments() {
    const char open = peek();
    if (open != '(' && open != '[') fail(ErrorCode::SyntaxError, "expected '(' or '['");
    const char close = open == '(' ? ')' : ']';
    advance();
    std::vector<unsigned> args;
    skip_blanks();
    if (peek() == close) {
      advance();
      return args;
    }
    while (true) {
      skip_blanks();
      args.push_back(number());
      skip_blanks();
      if (peek() == close) break;
      expect(',');
    }
    advance();
    return args;
  }

 private:
  void skip_blanks() {
    while (peek() == ' ' || peek() == '\t') advance();
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t column_ = 1;
};

}  // namespace

PDCode parse_pd(std::string_view text) {
  PDCode pd;
  Scanner in(text);
  // edge label -> number of uses
  std::map<unsigned, std::size_t> uses;
  while (true) {
    in.skip_space();
    if (in.done()) break;
    const auto line = in.line();
    const auto column = in.column();
    const char head = in.peek();
    if (head == 'X') {
      in.advance();
      int sign = 0;
      if (in.peek() == '+' || in.peek() == '-') {
        sign = in.peek() == '+' ? 1 : -1;
        in.advance();
      }
      auto args = in.arguments();
      if (args.size() != 4)
        throw ParseError(ErrorCode::ArityError, line, column,
                         "crossing needs 4 edge labels, found " + std::to_string(args.size()));
      PDCrossing x;
      std::copy(args.begin(), args.end(), x.edges.begin());
      x.sign = sign;
      x.line = line;
      x.column = column;
      for (auto e : args) ++uses[e];
      pd.crossings.push_back(x);
    } else if (head == 'O') {
      in.advance();
      auto args = in.arguments();
      if (args.size() != 1)
        throw ParseError(ErrorCode::ArityError, line, column,
                         "free loop needs 1 label, found " + std::to_string(args.size()));
      if (std::find(pd.free_loops.begin(), pd.free_loops.end(), args[0]) != pd.free_loops.end())
        throw ParseError(ErrorCode::EdgeMultiplicityError, line, column,
                         "free loop " + std::to_string(args[0]) + " declared twice");
      pd.free_loops.push_back(args[0]);
    } else {
      in.fail(ErrorCode::SyntaxError, std::string("unexpected character '") + head + "'");
    }
  }

  const auto edges = pd.edge_count();
  for (const auto& [e, count] : uses)
    if (e < 1 || e > edges)
      throw Error(ErrorCode::EdgeMultiplicityError,
                  "edge " + std::to_string(e) + " outside 1.." + std::to_string(edges), {e});
  for (unsigned e = 1; e <= edges; ++e) {
    auto it = uses.find(e);
    const auto count = it == uses.end() ? 0 : it->second;
    if (count != 2)
      throw Error(ErrorCode::EdgeMultiplicityError,
                  "edge " + std::to_string(e) + " appears " + std::to_string(count) +
                      " times, expected 2",
                  {e});
  }
  for (auto k : pd.free_loops)
    if (k >= 1 && k <= edges)
      throw Error(ErrorCode::EdgeMultiplicityError,
                  "free loop label " + std::to_string(k) + " clashes with an edge", {k});
  return pd;
}

EdgeComponents edge_components(const PDCode& pd) {
  const auto edges = pd.edge_count();
  std::vector<unsigned> parent(edges + 1);
  std::iota(parent.begin(), parent.end(), 0u);
  auto find = [&](unsigned e) {
    while (parent[e] != e) e = parent[e] = parent[parent[e]];
    return e;
  };
  auto unite = [&](unsigned a, unsigned b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  };
  for (const auto& x : pd.crossings) {
    unite(x.edges[0], x.edges[2]);
    unite(x.edges[1], x.edges[3]);
  }
  EdgeComponents out;
  out.component.resize(edges);
  out.successor.resize(edges);
  std::map<unsigned, std::vector<unsigned>> members;
  for (unsigned e = 1; e <= edges; ++e) members[find(e)].push_back(e);
  for (const auto& [root, list] : members) {
    for (std::size_t i = 0; i < list.size(); ++i) {
      out.component[list[i] - 1] = out.count;
      out.successor[list[i] - 1] = list[(i + 1) % list.size()];
    }
    ++out.count;
  }
  return out;
}

PDCode infer_signs(const PDCode& pd) {
  PDCode out = pd;
  const auto comps = edge_components(pd);
  auto succ = [&](unsigned e) { return comps.successor[e - 1]; };
  auto ambiguous = [&](std::size_t i, const std::string& why) {
    throw Error(ErrorCode::OrientationAmbiguous,
                "crossing " + std::to_string(i + 1) + ": " + why + "; give its sign explicitly",
                {i});
  };

  // Direction of edges on two-edge components, learned from under-passages:
  // the under-in edge of a crossing enters it.
  std::map<unsigned, unsigned> enters_under;
  for (const auto& x : pd.crossings) enters_under[x.under_in()] = x.under_out();

  for (std::size_t i = 0; i < out.crossings.size(); ++i) {
    auto& x = out.crossings[i];
    const auto [a, b, c, d] = x.edges;
    if (succ(a) != c) ambiguous(i, "under-strand does not run a → c in the numbering");
    if (x.sign != 0) continue;
    const bool forward = succ(b) == d;  // over-strand b → d
    const bool backward = succ(d) == b;  // over-strand d → b
    if (b == d) ambiguous(i, "over-strand is a single edge");
    if (forward && !backward) {
      x.sign = -1;
    } else if (backward && !forward) {
      x.sign = 1;
    } else if (forward && backward) {
      // Two-edge component: b and d are each other's successor. If the
      // component passes under elsewhere as p → q, then here it runs q → p.
      if (auto it = enters_under.find(b); it != enters_under.end() && it->second == d) {
        x.sign = 1;  // elsewhere b → d, so here d → b
      } else if (auto jt = enters_under.find(d); jt != enters_under.end() && jt->second == b) {
        x.sign = -1;
      } else {
        ambiguous(i, "two-edge component never passes under");
      }
    } else {
      ambiguous(i, "over-edges are not consecutive");
    }
  }
  return out;
}

std::string format_pd(const PDCode& pd) {
  std::ostringstream out;
  bool first = true;
  for (const auto& x : pd.crossings) {
    out << (first ? "" : " ") << 'X' << (x.sign > 0 ? "+" : x.sign < 0 ? "-" : "") << '('
        << x.edges[0] << ',' << x.edges[1] << ',' << x.edges[2] << ',' << x.edges[3] << ')';
    first = false;
  }
  for (auto k : pd.free_loops) {
    out << (first ? "" : " ") << "O(" << k << ')';
    first = false;
  }
  return out.str();
}

}  // namespace qhom
