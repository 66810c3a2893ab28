#pragma once

#include "qhom/biquandle.hpp"
#include "qhom/quandle.hpp"

#include <variant>

namespace qhom {

/// A validated finite target: either kind of algebra.
using Structure = std::variant<Quandle, Biquandle>;

inline std::size_t order(const Structure& s) {
  return std::visit([](const auto& v) { return v.order(); }, s);
}

inline bool is_biquandle(const Structure& s) { return std::holds_alternative<Biquandle>(s); }

inline std::string_view kind_name(const Structure& s) {
  return is_biquandle(s) ? "biquandle" : "quandle";
}

}  // namespace qhom
