#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace qhom {

/// Sum of c·s^a·t^b with positive integer coefficients, as produced by the
/// quandle and upper biquandle polynomials.
class TwoVariablePolynomial {
 public:
  using Exponents = std::pair<unsigned, unsigned>;

  struct Term {
    std::uint64_t coefficient;
    unsigned s_exponent;
    unsigned t_exponent;
    friend bool operator==(const Term&, const Term&) = default;
  };

  void add_term(unsigned s_exponent, unsigned t_exponent, std::uint64_t coefficient = 1);

  /// Terms sorted descending by (s, t) exponent.
  std::vector<Term> terms() const;
  std::uint64_t coefficient(unsigned s_exponent, unsigned t_exponent) const;
  std::uint64_t total() const;
  bool empty() const noexcept { return terms_.empty(); }

  /// "12 s^77 t^77 + 4 s^77 t^68"; "0" for the empty polynomial.
  std::string to_string() const;
  /// Inverse of to_string. Also accepts the compact "12s^77t^77" spelling.
  static TwoVariablePolynomial parse(std::string_view text);

  friend bool operator==(const TwoVariablePolynomial&, const TwoVariablePolynomial&) = default;

 private:
  std::map<Exponents, std::uint64_t> terms_;
};

}  // namespace qhom
