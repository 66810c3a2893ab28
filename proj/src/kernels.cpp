#include "qhom/kernels.hpp"

#include "parallel.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace qhom::kernels {

std::optional<std::array<Element, 3>> self_distributivity_violation(const Table& t) {
  const auto n = t.order();
  return detail::first_by_leading<std::array<Element, 3>>(n, [&](Element x) -> std::optional<std::array<Element, 3>> {
    for (Element y = 0; y < n; ++y) {
      const auto xy = t(x, y);
      for (Element z = 0; z < n; ++z)
        if (t(xy, z) != t(t(x, z), t(y, z))) return std::array<Element, 3>{x, y, z};
    }
    return std::nullopt;
  });
}

std::optional<std::array<Element, 4>> medial_violation(const Table& t) {
  const auto n = t.order();
  return detail::first_by_leading<std::array<Element, 4>>(n, [&](Element x) -> std::optional<std::array<Element, 4>> {
    for (Element y = 0; y < n; ++y) {
      const auto xy = t(x, y);
      for (Element z = 0; z < n; ++z) {
        const auto xz = t(x, z);
        for (Element w = 0; w < n; ++w)
          if (t(xy, t(z, w)) != t(xz, t(y, w))) return std::array<Element, 4>{x, y, z, w};
      }
    }
    return std::nullopt;
  });
}

int thread_count() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

}  // namespace qhom::kernels
