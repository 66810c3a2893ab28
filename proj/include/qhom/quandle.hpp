#pragma once

#include "qhom/polynomial.hpp"
#include "qhom/table.hpp"

#include <array>
#include <memory>
#include <optional>
#include <span>
#include <vector>

namespace qhom {

struct AbelianCheck {
  bool abelian = true;
  /// Lexicographically smallest (x, y, z, w) with (x▷y)▷(z▷w) ≠ (x▷z)▷(y▷w).
  std::optional<std::array<Element, 4>> witness;
  explicit operator bool() const noexcept { return abelian; }
};

/// A finite quandle: an idempotent, right-invertible, right self-distributive
/// operation table together with its dual table. Only obtainable through
/// Quandle::validate, so every instance satisfies the axioms.
///
/// Copies share the lazily computed predicate cache; instances are safe to
/// read from several threads.
class Quandle {
 public:
  /// Checks the axioms in the order idempotence, column bijectivity,
  /// self-distributivity and throws Error with the smallest witness.
  static Quandle validate(Table table);

  std::size_t order() const noexcept { return table_.order(); }
  Element op(Element x, Element y) const noexcept { return table_(x, y); }
  Element inv(Element x, Element y) const noexcept { return dual_(x, y); }
  const Table& table() const noexcept { return table_; }
  const Table& dual_table() const noexcept { return dual_; }

  const AbelianCheck& abelian_check() const;
  bool involutory() const;
  bool commutative() const;

  friend bool operator==(const Quandle& a, const Quandle& b) { return a.table_ == b.table_; }

 private:
  struct Cache;
  Quandle(Table table, Table dual);

  Table table_;
  Table dual_;
  std::shared_ptr<Cache> cache_;
};

Quandle dual(const Quandle& q);

AbelianCheck is_abelian(const Quandle& q);
bool is_involutory(const Quandle& q);
bool is_commutative(const Quandle& q);

/// x ▷ y = x on n elements. Throws InvalidOrder for n = 0.
Quandle trivial_quandle(std::size_t n);

/// Z_n with x ▷ y = t·x + (1−t)·y. Element i stands for the residue i+1, so
/// the class of zero is the last element. Throws NonUnitParameter unless
/// gcd(t, n) = 1.
Quandle alexander_quandle(std::size_t n, long long t);

/// Componentwise operation on pairs; pair (i, j) has index i·|a| + j.
Quandle product_quandle(const Quandle& q, const Quandle& a);

/// Smallest subset containing `seed` closed under ▷ and ▷⁻¹, sorted.
std::vector<Element> subquandle_generated(const Quandle& q, std::span<const Element> seed);

/// The quandle induced on a closed subset (elements renumbered in the given order).
Quandle induced_subquandle(const Quandle& q, std::span<const Element> subset);

/// φ(X) = Σ_x s^{r(x)} t^{c(x)}, r(x) = #{y : x▷y = x}, c(x) = #{y : y▷x = y}.
TwoVariablePolynomial quandle_polynomial(const Quandle& q);

/// Per-element (r(x), c(x)) used to prune isomorphism search.
std::vector<std::pair<unsigned, unsigned>> quandle_profiles(const Quandle& q);

/// All quandle homomorphisms src → dst in lexicographic order.
std::vector<std::vector<Element>> enumerate_quandle_homs(const Quandle& src, const Quandle& dst);

/// Lexicographically first isomorphism q1 → q2, if any.
std::optional<std::vector<Element>> find_isomorphism(const Quandle& q1, const Quandle& q2);

bool is_quandle_homomorphism(const Quandle& src, const Quandle& dst, std::span<const Element> map);

}  // namespace qhom
