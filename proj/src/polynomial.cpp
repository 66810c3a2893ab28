#include "qhom/polynomial.hpp"

#include "qhom/error.hpp"

#include <cctype>

namespace qhom {

void TwoVariablePolynomial::add_term(unsigned s_exponent, unsigned t_exponent,
                                     std::uint64_t coefficient) {
  if (coefficient == 0) return;
  terms_[{s_exponent, t_exponent}] += coefficient;
}

std::vector<TwoVariablePolynomial::Term> TwoVariablePolynomial::terms() const {
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it)
    out.push_back({it->second, it->first.first, it->first.second});
  return out;
}

std::uint64_t TwoVariablePolynomial::coefficient(unsigned s_exponent, unsigned t_exponent) const {
  auto it = terms_.find({s_exponent, t_exponent});
  return it == terms_.end() ? 0 : it->second;
}

std::uint64_t TwoVariablePolynomial::total() const {
  std::uint64_t sum = 0;
  for (const auto& [_, c] : terms_) sum += c;
  return sum;
}

std::string TwoVariablePolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& term : terms()) {
    if (!out.empty()) out += " + ";
    out += std::to_string(term.coefficient) + " s^" + std::to_string(term.s_exponent) + " t^" +
           std::to_string(term.t_exponent);
  }
  return out;
}

namespace {

class PolyScanner {
 public:
  explicit PolyScanner(std::string_view text) : text_(text) {}

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool at_end() {
    skip_space();
    return pos_ >= text_.size();
  }
  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }
  std::uint64_t number() {
    skip_space();
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
      fail("expected a number");
    std::uint64_t v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
      v = v * 10 + static_cast<std::uint64_t>(text_[pos_++] - '0');
    return v;
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(ErrorCode::FormatError, 1, pos_ + 1, "polynomial: " + what);
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

TwoVariablePolynomial TwoVariablePolynomial::parse(std::string_view text) {
  TwoVariablePolynomial poly;
  PolyScanner scan(text);
  if (scan.at_end()) scan.fail("empty input");
  if (text == "0") return poly;
  do {
    auto c = scan.number();
    scan.expect('s');
    scan.expect('^');
    auto a = scan.number();
    scan.expect('t');
    scan.expect('^');
    auto b = scan.number();
    poly.add_term(static_cast<unsigned>(a), static_cast<unsigned>(b), c);
  } while (scan.accept('+'));
  if (!scan.at_end()) scan.fail("trailing characters");
  return poly;
}

}  // namespace qhom
