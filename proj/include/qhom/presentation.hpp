#pragma once

#include "qhom/pd_code.hpp"

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace qhom {

enum class PresentationKind { Quandle, Biquandle };

/// Binary operation a relation evaluates. Quandle presentations use
/// Triangle / TriangleInverse; biquandle ones use the components of B and B⁻¹.
enum class RelationOp : std::uint8_t { Triangle, TriangleInverse, B1, B2, BInv1, BInv2 };

std::string_view to_string(RelationOp op);

/// output = op(left, right), all three generator indices.
struct Relation {
  RelationOp op;
  std::uint32_t output;
  std::uint32_t left;
  std::uint32_t right;
  std::size_t crossing;
  int sign;
};

struct LinkPresentation {
  PresentationKind kind = PresentationKind::Quandle;
  /// Edge labels making up each generator; a free loop holds its O(k) label.
  std::vector<std::vector<unsigned>> generators;
  std::vector<Relation> relations;
  std::vector<std::size_t> component_of;
  std::size_t component_count = 0;

  std::size_t generator_count() const noexcept { return generators.size(); }
};

/// Arcs as generators; one relation per crossing:
/// arc(c) = arc(a) ▷ arc(over) at a positive crossing, ▷⁻¹ at a negative one.
/// `mirror` swaps the two. Unsigned crossings are resolved by infer_signs.
LinkPresentation quandle_presentation(const PDCode& pd, bool mirror = false);

/// Edges (semiarcs) as generators; two relations per crossing. With ui, oi
/// the incoming under/over edges and uo, oo the outgoing ones:
///   ▷ type:   (oo, uo) = B(ui, oi)
///   ▷⁻¹ type: (uo, oo) = B⁻¹(oi, ui)
LinkPresentation biquandle_presentation(const PDCode& pd, bool mirror = false);

}  // namespace qhom
