#include "qhom/biquandle.hpp"

#include "qhom/error.hpp"
#include "qhom/hom_search.hpp"

#include "parallel.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace qhom {

namespace {

std::string pair_text(std::size_t x, std::size_t y) { return format_elements({x, y}); }

}  // namespace

Biquandle Biquandle::validate(std::size_t n, std::vector<Element> matrix) {
  if (n == 0) throw Error(ErrorCode::InvalidOrder, "biquandle order must be at least 1");
  if (matrix.size() != 2 * n * n)
    throw Error(ErrorCode::InvalidOrder, "biquandle matrix must be n×2n");
  for (std::size_t i = 0; i < matrix.size(); ++i)
    if (matrix[i] >= n)
      throw Error(ErrorCode::EntryOutOfRange,
                  "entry at row " + std::to_string(i / (2 * n) + 1) + ", column " +
                      std::to_string(i % (2 * n) + 1) + " outside 1.." + std::to_string(n),
                  {i / (2 * n), i % (2 * n)});

  Biquandle b;
  b.upper_ = Table::generate(n, [&](Element y, Element x) { return matrix[y * 2 * n + x]; });
  b.lower_ = Table::generate(n, [&](Element x, Element y) { return matrix[x * 2 * n + n + y]; });
  b.b1_ = Table::generate(n, [&](Element x, Element y) { return b.upper_(y, x); });
  b.b2_ = Table::generate(n, [&](Element x, Element y) { return b.lower_(x, y); });

  const auto n2 = n * n;
  constexpr auto unset = static_cast<std::size_t>(-1);
  b.b_.resize(n2);
  b.b_inv_.assign(n2, unset);
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y) {
      const auto p = b.pack(x, y);
      const auto image = b.pack(b.b1_(x, y), b.b2_(x, y));
      b.b_[p] = image;
      if (b.b_inv_[image] != unset) {
        const auto [x0, y0] = b.unpack(b.b_inv_[image]);
        throw Error(ErrorCode::BNotBijective,
                    "B" + pair_text(x0, y0) + " = B" + pair_text(x, y), {x0, y0, x, y});
      }
      b.b_inv_[image] = p;
    }
  b.b_inv1_ = Table::generate(n, [&](Element x, Element y) { return b.unpack(b.b_inv_[b.pack(x, y)]).first; });
  b.b_inv2_ = Table::generate(n, [&](Element x, Element y) { return b.unpack(b.b_inv_[b.pack(x, y)]).second; });

  // S(B1(x, y), x) = (B2(x, y), y).
  b.s_.assign(n2, unset);
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y) {
      const auto key = b.pack(b.b1_(x, y), x);
      const auto value = b.pack(b.b2_(x, y), y);
      if (b.s_[key] != unset && b.s_[key] != value)
        throw Error(ErrorCode::SidewaysConflict,
                    "S" + pair_text(b.b1_(x, y), x) + " has two values", {b.b1_(x, y), x});
      b.s_[key] = value;
    }
  for (std::size_t key = 0; key < n2; ++key)
    if (b.s_[key] == unset) {
      const auto [p, q] = b.unpack(key);
      throw Error(ErrorCode::SidewaysUndefined, "S" + pair_text(p, q) + " is undefined", {p, q});
    }
  {
    std::vector<std::size_t> preimage(n2, unset);
    for (std::size_t key = 0; key < n2; ++key) {
      if (preimage[b.s_[key]] != unset) {
        const auto [p, q] = b.unpack(b.s_[key]);
        throw Error(ErrorCode::SidewaysNotBijective,
                    "S takes the value " + pair_text(p, q) + " twice", {p, q});
      }
      preimage[b.s_[key]] = key;
    }
  }

  b.diagonal_.resize(n);
  std::vector<char> hit(n, 0);
  for (Element a = 0; a < n; ++a) {
    const auto [p, q] = b.sideways(a, a);
    if (p != q)
      throw Error(ErrorCode::DiagonalMismatch,
                  "S(" + std::to_string(a + 1) + ", " + std::to_string(a + 1) + ") = " +
                      pair_text(p, q) + " is off the diagonal",
                  {a});
    b.diagonal_[a] = p;
  }
  for (Element a = 0; a < n; ++a) {
    if (hit[b.diagonal_[a]])
      throw Error(ErrorCode::DiagonalNotBijective,
                  "diagonal map repeats " + std::to_string(b.diagonal_[a] + 1), {b.diagonal_[a]});
    hit[b.diagonal_[a]] = 1;
  }

  auto yb = detail::first_by_leading<std::array<Element, 3>>(
      n, [&](Element x) -> std::optional<std::array<Element, 3>> {
        for (Element y = 0; y < n; ++y)
          for (Element z = 0; z < n; ++z) {
            // (B×I)(I×B)(B×I)
            auto [l1, l2] = b.map(x, y);
            auto [l3, l4] = b.map(l2, z);
            auto [l5, l6] = b.map(l1, l3);
            // (I×B)(B×I)(I×B)
            auto [r1, r2] = b.map(y, z);
            auto [r3, r4] = b.map(x, r1);
            auto [r5, r6] = b.map(r4, r2);
            if (l5 != r3 || l6 != r5 || l4 != r6) return std::array<Element, 3>{x, y, z};
          }
        return std::nullopt;
      });
  if (yb) {
    std::vector<std::size_t> wit(yb->begin(), yb->end());
    throw Error(ErrorCode::YangBaxterFailure,
                "Yang-Baxter fails at (x, y, z) = " + format_elements(wit), wit);
  }
  return b;
}

std::vector<Element> Biquandle::matrix() const {
  const auto n = order();
  std::vector<Element> m(2 * n * n);
  for (Element i = 0; i < n; ++i)
    for (Element j = 0; j < n; ++j) {
      m[i * 2 * n + j] = upper_(i, j);
      m[i * 2 * n + n + j] = lower_(i, j);
    }
  return m;
}

namespace {

std::vector<Element> matrix_from(std::size_t n, auto&& up, auto&& down) {
  std::vector<Element> m(2 * n * n);
  for (Element i = 0; i < n; ++i)
    for (Element j = 0; j < n; ++j) {
      m[i * 2 * n + j] = static_cast<Element>(up(i, j));
      m[i * 2 * n + n + j] = static_cast<Element>(down(i, j));
    }
  return m;
}

long long positive_mod(long long a, long long n) {
  auto r = a % n;
  return r < 0 ? r + n : r;
}

}  // namespace

Biquandle from_quandle(const Quandle& q) {
  return Biquandle::validate(
      q.order(), matrix_from(
                     q.order(), [](Element y, Element) { return y; },
                     [&](Element x, Element y) { return q.op(x, y); }));
}

Biquandle alexander_biquandle(std::size_t n, long long t, long long r) {
  if (n == 0) throw Error(ErrorCode::InvalidOrder, "Alexander biquandle needs n ≥ 1");
  const auto m = static_cast<long long>(n);
  for (auto [name, v] : {std::pair{"t", t}, std::pair{"r", r}})
    if (std::gcd(positive_mod(v, m), m) != 1)
      throw Error(ErrorCode::NonUnitParameter, std::string(name) + " = " + std::to_string(v) +
                                                   " is not a unit mod " + std::to_string(n));
  const auto tm = positive_mod(t, m);
  const auto rm = positive_mod(r, m);
  // Element i represents residue (i + 1) mod n.
  auto residue = [&](Element i) { return static_cast<long long>((i + 1) % m); };
  auto element = [&](long long v) { return static_cast<Element>(positive_mod(v - 1, m)); };
  return Biquandle::validate(
      n, matrix_from(
             n,
             [&](Element y, Element x) {
               return element((1 - tm * rm) * residue(x) + tm * residue(y));
             },
             [&](Element x, Element) { return element(rm * residue(x)); }));
}

Biquandle constant_action_biquandle(std::span<const Element> sigma) {
  if (sigma.empty()) throw Error(ErrorCode::InvalidOrder, "permutation must be nonempty");
  if (!is_permutation(sigma)) {
    std::vector<std::size_t> images(sigma.begin(), sigma.end());
    throw Error(ErrorCode::NotAPermutation, format_elements(images) + " is not a permutation");
  }
  const auto inv = invert_permutation(sigma);
  return Biquandle::validate(
      sigma.size(), matrix_from(
                        sigma.size(), [&](Element y, Element) { return sigma[y]; },
                        [&](Element x, Element) { return inv[x]; }));
}

BiquandleAbelianCheck is_abelian_biquandle(const Biquandle& bq) {
  const auto n = bq.order();
  struct Hit {
    std::array<Element, 4> tuple;
    int equation;
  };
  auto hit = detail::first_by_leading<Hit>(n, [&](Element a) -> std::optional<Hit> {
    for (Element b = 0; b < n; ++b)
      for (Element x = 0; x < n; ++x)
        for (Element y = 0; y < n; ++y) {
          const std::array<Element, 4> t{a, b, x, y};
          if (bq.up(bq.up(b, a), bq.up(y, x)) != bq.up(bq.up(b, y), bq.up(a, x))) return Hit{t, 1};
          if (bq.up(bq.down(a, b), bq.down(x, y)) != bq.down(bq.up(a, x), bq.up(b, y)))
            return Hit{t, 2};
          if (bq.down(bq.down(x, y), bq.down(a, b)) != bq.down(bq.down(x, a), bq.down(y, b)))
            return Hit{t, 3};
        }
    return std::nullopt;
  });
  if (!hit) return {};
  return {false, hit->equation, hit->tuple};
}

bool satisfies_fourth_abelian_condition(const Biquandle& bq) {
  const auto n = bq.order();
  auto hit = detail::first_by_leading<std::array<Element, 4>>(
      n, [&](Element a) -> std::optional<std::array<Element, 4>> {
        for (Element b = 0; b < n; ++b)
          for (Element x = 0; x < n; ++x)
            for (Element y = 0; y < n; ++y)
              if (bq.down(bq.up(y, x), bq.up(b, a)) != bq.up(bq.down(y, b), bq.down(x, a)))
                return std::array<Element, 4>{a, b, x, y};
        return std::nullopt;
      });
  return !hit;
}

std::vector<std::pair<unsigned, unsigned>> biquandle_profiles(const Biquandle& b) {
  const auto n = b.order();
  std::vector<std::pair<unsigned, unsigned>> profiles(n, {0, 0});
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y) {
      if (b.up(x, y) == x) ++profiles[x].first;
      if (b.down(y, x) == y) ++profiles[x].second;
    }
  return profiles;
}

TwoVariablePolynomial upper_biquandle_polynomial(const Biquandle& b) {
  TwoVariablePolynomial poly;
  for (const auto& [r, c] : biquandle_profiles(b)) poly.add_term(r, c);
  return poly;
}

std::optional<std::vector<Element>> find_biquandle_isomorphism(const Biquandle& b1,
                                                               const Biquandle& b2) {
  const auto n = b1.order();
  if (n != b2.order()) return std::nullopt;
  const auto p1 = biquandle_profiles(b1);
  const auto p2 = biquandle_profiles(b2);
  {
    auto s1 = p1, s2 = p2;
    std::sort(s1.begin(), s1.end());
    std::sort(s2.begin(), s2.end());
    if (s1 != s2) return std::nullopt;
  }
  SearchOptions options;
  options.bijective = true;
  options.limit = 1;
  options.allowed.assign(n * n, 0);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t v = 0; v < n; ++v) options.allowed[x * n + v] = p1[x] == p2[v];
  const Table* s[] = {&b1.upper(), &b1.lower()};
  const Table* d[] = {&b2.upper(), &b2.lower()};
  auto found = search_homomorphisms(s, d, options);
  if (found.empty()) return std::nullopt;
  return std::move(found.front());
}

bool is_biquandle_homomorphism(const Biquandle& src, const Biquandle& dst,
                               std::span<const Element> map) {
  if (map.size() != src.order()) return false;
  for (auto v : map)
    if (v >= dst.order()) return false;
  const Table* s[] = {&src.upper(), &src.lower()};
  const Table* d[] = {&dst.upper(), &dst.lower()};
  return preserves_operations(s, d, map);
}

}  // namespace qhom
