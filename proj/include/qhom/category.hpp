#pragma once

#include "qhom/quandle.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace qhom {

/// f : Q × A → X stored row-major, f(q, a) = table[q * |A| + a].
using Bihomomorphism = std::vector<Element>;

/// Every f whose rows are homomorphisms A → X and whose columns are
/// homomorphisms Q → X, in row-major lexicographic order. Throws NotAbelian
/// if any argument is not abelian.
std::vector<Bihomomorphism> enumerate_bihomomorphisms(const Quandle& q, const Quandle& a,
                                                      const Quandle& x);

/// Currying f ↦ (q ↦ f(q, −)) from Bihom(Q, A; X) to Hom(Q, Hom(A, X)).
struct AdjunctionWitness {
  std::size_t bihomomorphisms = 0;
  std::size_t homomorphisms = 0;
  /// curry[i] = index in Hom(Q, Hom(A, X)) of the curried i-th bihomomorphism.
  std::vector<Element> curry;
};

/// Checks that currying is well defined, injective, surjective, undone by
/// uncurrying, and an isomorphism of the pointwise quandles: for every pair
/// (f, g), f ▷ g is a bihomomorphism and curry(f ▷ g) = curry(f) ▷ curry(g).
/// The pointwise tables are never materialised, so the check stays linear in
/// memory. Any failure throws WitnessFailure naming the stage.
AdjunctionWitness check_adjunction(const Quandle& q, const Quandle& a, const Quandle& x);

/// Bihom(1, A; X) equals Hom(A, X) as lists of tables.
bool unit_law_holds(const Quandle& a, const Quandle& x);

/// Transposition is a bijection Bihom(Q, A; X) → Bihom(A, Q; X).
bool swap_symmetry_holds(const Quandle& q, const Quandle& a, const Quandle& x);

}  // namespace qhom
