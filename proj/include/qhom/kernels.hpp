#pragma once

// Data-parallel scans over operation tables. Each kernel returns the
// lexicographically smallest violating tuple regardless of thread count.
// Serial counterparts live in qhom/reference.hpp.

#include "qhom/table.hpp"

#include <array>
#include <optional>

namespace qhom::kernels {

/// Smallest (x, y, z) with (x*y)*z ≠ (x*z)*(y*z).
std::optional<std::array<Element, 3>> self_distributivity_violation(const Table& t);

/// Smallest (x, y, z, w) with (x*y)*(z*w) ≠ (x*z)*(y*w).
std::optional<std::array<Element, 4>> medial_violation(const Table& t);

/// Number of OpenMP threads the kernels will use (1 without OpenMP).
int thread_count();

}  // namespace qhom::kernels
