#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace qhom {

/// One crossing X(a, b, c, d): a is the incoming under-edge, c the outgoing
/// one, read counterclockwise. sign is +1, -1 or 0 when not yet known. A
/// positive crossing has its over-strand running d → b.
struct PDCrossing {
  std::array<unsigned, 4> edges{};
  int sign = 0;
  std::size_t line = 0;
  std::size_t column = 0;

  unsigned under_in() const noexcept { return edges[0]; }
  unsigned under_out() const noexcept { return edges[2]; }
  /// Only meaningful once sign is known.
  unsigned over_in() const noexcept { return sign > 0 ? edges[3] : edges[1]; }
  unsigned over_out() const noexcept { return sign > 0 ? edges[1] : edges[3]; }
};

struct PDCode {
  std::vector<PDCrossing> crossings;
  /// Labels of crossingless components declared by O(k).
  std::vector<unsigned> free_loops;

  std::size_t edge_count() const noexcept { return 2 * crossings.size(); }
  bool signs_resolved() const noexcept;
};

/// Tokens: X(a,b,c,d), X+(...), X-(...), O(k); square brackets work too.
/// Text after `#` is a comment.
PDCode parse_pd(std::string_view text);

/// Fills in every unknown sign from the edge numbering, which must increase
/// along the orientation of each component and wrap around.
PDCode infer_signs(const PDCode& pd);

/// Edge components: component[e - 1] for edge label e, numbered by smallest
/// edge. Free loops are not included.
struct EdgeComponents {
  std::vector<std::size_t> component;
  /// successor[e - 1] is the next edge label along the component.
  std::vector<unsigned> successor;
  std::size_t count = 0;
};

EdgeComponents edge_components(const PDCode& pd);

std::string format_pd(const PDCode& pd);

}  // namespace qhom
