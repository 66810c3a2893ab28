#pragma once

#include "qhom/coloring.hpp"

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

namespace qhom {

/// Colorings (or finite homomorphisms) made into a quandle by pointwise ▷.
/// structure element i is colorings[i].
struct HomQuandle {
  std::vector<Coloring> colorings;
  Quandle target;
  Quandle structure;
  /// Generators the coloring search branched on; empty for finite sources.
  std::vector<std::uint32_t> free_generators;
};

/// Pointwise f^g and f_g on biquandle colorings.
struct HomBiquandle {
  std::vector<Coloring> colorings;
  Biquandle target;
  Biquandle structure;
};

/// Throws TargetNotAbelian (with the medial witness) for a non-abelian target.
HomQuandle hom_quandle(const ColoringSet& set);
HomBiquandle hom_biquandle(const ColoringSet& set);

/// Pointwise structure on the homomorphisms src -> dst.
HomQuandle hom_quandle_from_finite(const Quandle& src, const Quandle& dst);

/// Pointwise quandle on a sorted list of maps into an abelian target.
/// Throws ClosureFailure naming the first pair whose product leaves the list.
Quandle pointwise_quandle(const std::vector<Coloring>& maps, const Quandle& target);

/// First (f, g) in canonical order whose pointwise f ▷ g is not a coloring,
/// as indices into set.colorings. Works for any quandle target.
std::optional<std::pair<std::size_t, std::size_t>> closure_failure(const ColoringSet& set);

/// a ↦ index of the constant coloring with value a; checked to be an
/// injective homomorphism target -> structure.
std::vector<Element> constant_embedding(const HomQuandle& h);

/// f ↦ (f(g_1), ..., f(g_c)) into the c-fold power of the target, as
/// indices of product_quandle applied c times. `generators` receives the
/// coordinates used.
std::vector<Element> embed_in_power(const HomQuandle& h, std::size_t c,
                                    std::vector<std::uint32_t>* generators = nullptr);

/// target × target × ... (c factors), c ≥ 1.
Quandle power_quandle(const Quandle& q, std::size_t c);

}  // namespace qhom
