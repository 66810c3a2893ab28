#pragma once

#include "qhom/presentation.hpp"
#include "qhom/structure.hpp"

#include <array>
#include <cstddef>
#include <vector>

namespace qhom {

/// generator index -> target element
using Coloring = std::vector<Element>;

struct ColoringSet {
  LinkPresentation presentation;
  Structure target;
  /// Sorted lexicographically, pairwise distinct.
  std::vector<Coloring> colorings;
  /// Generators the search branched on, in branching order.
  std::vector<std::uint32_t> free_generators;

  std::size_t size() const noexcept { return colorings.size(); }
};

/// The operation tables a presentation's RelationOps refer to, indexed by
/// RelationOp. Throws KindMismatch if the kinds differ.
std::array<const Table*, 6> relation_tables(const LinkPresentation& p, const Structure& target);
std::array<const Table*, 6> relation_tables(const LinkPresentation& p, Structure&& target) = delete;

/// Search order: each step either branches on a free generator, derives a
/// generator as op(left, right) from known ones, or checks a relation whose
/// generators are all known.
struct ColoringPlan {
  enum class Kind : std::uint8_t { Branch, Derive, Check };
  struct Step {
    Kind kind;
    std::uint32_t index;  // generator for Branch, relation otherwise
  };
  std::vector<Step> steps;
  std::vector<std::uint32_t> free_generators;
};

/// Free generators are chosen greedily in breadth-first order from generator 0.
ColoringPlan plan_coloring(const LinkPresentation& p);

struct ColoringOptions {
  /// Split on the first free generator's value across OpenMP threads.
  bool parallel = true;
};

ColoringSet enumerate_colorings(const LinkPresentation& p, const Structure& target,
                                const ColoringOptions& options = {});

std::size_t counting_invariant(const LinkPresentation& p, const Structure& target);

bool satisfies_relations(const LinkPresentation& p, const std::array<const Table*, 6>& tables,
                         const Coloring& c);

}  // namespace qhom
