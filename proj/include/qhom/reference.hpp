#pragma once

// Straightforward serial implementations kept as oracles for the optimized
// code paths. Slow on purpose; only meant for small instances.

#include "qhom/coloring.hpp"
#include "qhom/quandle.hpp"
#include "qhom/table.hpp"

#include <array>
#include <optional>
#include <vector>

namespace qhom::reference {

std::optional<std::array<Element, 3>> self_distributivity_violation(const Table& t);
std::optional<std::array<Element, 4>> medial_violation(const Table& t);

/// Backtracking in generator order, checking each relation once its three
/// generators are assigned. No propagation, no threads.
std::vector<Coloring> colorings_serial(const LinkPresentation& p, const Structure& target);

/// Every one of the n^g assignments, tested against all relations.
std::vector<Coloring> colorings_brute_force(const LinkPresentation& p, const Structure& target);

/// n^g, saturating at SIZE_MAX.
std::size_t search_space(std::size_t n, std::size_t generators);

/// All maps src -> dst tested one by one.
std::vector<std::vector<Element>> quandle_homs_brute_force(const Quandle& src, const Quandle& dst);

/// All |X|^(|Q|·|A|) tables f with every row and column a homomorphism.
std::vector<std::vector<Element>> bihomomorphisms_brute_force(const Quandle& q, const Quandle& a,
                                                              const Quandle& x);

}  // namespace qhom::reference
