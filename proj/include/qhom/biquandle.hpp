#pragma once

#include "qhom/polynomial.hpp"
#include "qhom/quandle.hpp"
#include "qhom/table.hpp"

#include <array>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace qhom {

/// A finite biquandle given by B(x, y) = (y^x, x_y).
///
/// Matrix layout (n rows, 2n columns, 1-based in files):
///   left block  M[y][x]     = y^x   (row: element acted on, column: actor)
///   right block M[x][n + y] = x_y
/// so that B(i, j) = (M[j][i], M[i][j + n]). Example on n = 2, the swap map
/// B(x, y) = (y, x) has y^x = y and x_y = x:
///   1 1 | 1 1
///   2 2 | 2 2
class Biquandle {
 public:
  using Pair = std::pair<Element, Element>;

  /// `matrix` is n×2n, row-major, 0-based entries. Verifies B bijective,
  /// the sideways map, the diagonal condition and Yang-Baxter, in that order.
  static Biquandle validate(std::size_t n, std::vector<Element> matrix);

  std::size_t order() const noexcept { return upper_.order(); }

  /// y^x
  Element up(Element y, Element x) const noexcept { return upper_(y, x); }
  /// x_y
  Element down(Element x, Element y) const noexcept { return lower_(x, y); }

  Pair map(Element x, Element y) const noexcept { return unpack(b_[pack(x, y)]); }
  Pair inverse_map(Element x, Element y) const noexcept { return unpack(b_inv_[pack(x, y)]); }
  Pair sideways(Element x, Element y) const noexcept { return unpack(s_[pack(x, y)]); }
  /// The common value of (SΔ)_1 and (SΔ)_2.
  Element diagonal(Element x) const noexcept { return diagonal_[x]; }

  /// upper()(y, x) = y^x and lower()(x, y) = x_y.
  const Table& upper() const noexcept { return upper_; }
  const Table& lower() const noexcept { return lower_; }

  /// Components of B and B⁻¹ as two-argument tables: (x, y) ↦ B_k(x, y).
  const Table& b1() const noexcept { return b1_; }
  const Table& b2() const noexcept { return b2_; }
  const Table& b_inv1() const noexcept { return b_inv1_; }
  const Table& b_inv2() const noexcept { return b_inv2_; }

  /// n×2n row-major matrix, 0-based.
  std::vector<Element> matrix() const;

  friend bool operator==(const Biquandle& a, const Biquandle& b) {
    return a.upper_ == b.upper_ && a.lower_ == b.lower_;
  }

 private:
  Biquandle() = default;
  std::size_t pack(Element x, Element y) const noexcept { return x * order() + y; }
  Pair unpack(std::size_t p) const noexcept {
    return {static_cast<Element>(p / order()), static_cast<Element>(p % order())};
  }

  Table upper_;
  Table lower_;
  Table b1_, b2_, b_inv1_, b_inv2_;
  std::vector<std::size_t> b_;
  std::vector<std::size_t> b_inv_;
  std::vector<std::size_t> s_;
  std::vector<Element> diagonal_;
};

/// y^x = y, x_y = x ▷ y.
Biquandle from_quandle(const Quandle& q);

/// Z_n with B(x, y) = ((1 − t·r)·x + t·y, r·x); element i is residue i+1.
Biquandle alexander_biquandle(std::size_t n, long long t, long long r);

/// B(x, y) = (σ(y), σ⁻¹(x)). `sigma` holds 0-based images.
Biquandle constant_action_biquandle(std::span<const Element> sigma);

struct BiquandleAbelianCheck {
  bool abelian = true;
  /// 1: (b^a)^{y^x} = (b^y)^{a^x}
  /// 2: (a_b)^{x_y} = (a^x)_{b^y}
  /// 3: (x_y)_{a_b} = (x_a)_{y_b}
  int equation = 0;
  /// Smallest (a, b, x, y) violating some equation.
  std::optional<std::array<Element, 4>> witness;
  explicit operator bool() const noexcept { return abelian; }
};

BiquandleAbelianCheck is_abelian_biquandle(const Biquandle& b);

/// (y^x)_{b^a} = (y_b)^{x_a} for all a, b, x, y.
bool satisfies_fourth_abelian_condition(const Biquandle& b);

/// φ₁(X) = Σ_x s^{r(x)} t^{c(x)}, r(x) = #{y : x^y = x}, c(x) = #{y : y_x = y}.
TwoVariablePolynomial upper_biquandle_polynomial(const Biquandle& b);
std::vector<std::pair<unsigned, unsigned>> biquandle_profiles(const Biquandle& b);

std::optional<std::vector<Element>> find_biquandle_isomorphism(const Biquandle& b1,
                                                               const Biquandle& b2);

bool is_biquandle_homomorphism(const Biquandle& src, const Biquandle& dst,
                               std::span<const Element> map);

}  // namespace qhom
