#include "qhom/quandle.hpp"

#include "qhom/error.hpp"
#include "qhom/hom_search.hpp"
#include "qhom/kernels.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <string>

namespace qhom {

struct Quandle::Cache {
  std::once_flag abelian_once;
  AbelianCheck abelian;
  std::once_flag involutory_once;
  bool involutory = false;
  std::once_flag commutative_once;
  bool commutative = false;
};

Quandle::Quandle(Table table, Table dual)
    : table_(std::move(table)), dual_(std::move(dual)), cache_(std::make_shared<Cache>()) {}

Quandle Quandle::validate(Table table) {
  const auto n = table.order();
  if (n == 0) throw Error(ErrorCode::InvalidOrder, "quandle order must be at least 1");
  for (Element x = 0; x < n; ++x)
    if (table(x, x) != x)
      throw Error(ErrorCode::NotIdempotent, "x▷x ≠ x at x = " + std::to_string(x + 1), {x});
  if (auto y = table.first_non_permutation_column(); y >= 0) {
    auto col = static_cast<std::size_t>(y);
    throw Error(ErrorCode::ColumnNotPermutation,
                "column " + std::to_string(col + 1) + " is not a permutation", {col});
  }
  if (auto w = kernels::self_distributivity_violation(table)) {
    std::vector<std::size_t> wit(w->begin(), w->end());
    throw Error(ErrorCode::NotSelfDistributive,
                "(x▷y)▷z ≠ (x▷z)▷(y▷z) at (x, y, z) = " + format_elements(wit), wit);
  }
  auto dual_table = table.column_inverse();
  return Quandle(std::move(table), std::move(dual_table));
}

const AbelianCheck& Quandle::abelian_check() const {
  std::call_once(cache_->abelian_once, [this] {
    auto w = kernels::medial_violation(table_);
    cache_->abelian = AbelianCheck{!w.has_value(), w};
  });
  return cache_->abelian;
}

bool Quandle::involutory() const {
  std::call_once(cache_->involutory_once,
                 [this] { cache_->involutory = table_ == dual_; });
  return cache_->involutory;
}

bool Quandle::commutative() const {
  std::call_once(cache_->commutative_once, [this] {
    const auto n = order();
    bool ok = true;
    for (Element x = 0; x < n && ok; ++x)
      for (Element y = x + 1; y < n && ok; ++y) ok = table_(x, y) == table_(y, x);
    cache_->commutative = ok;
  });
  return cache_->commutative;
}

Quandle dual(const Quandle& q) { return Quandle::validate(q.dual_table()); }

AbelianCheck is_abelian(const Quandle& q) { return q.abelian_check(); }
bool is_involutory(const Quandle& q) { return q.involutory(); }
bool is_commutative(const Quandle& q) { return q.commutative(); }

Quandle trivial_quandle(std::size_t n) {
  if (n == 0) throw Error(ErrorCode::InvalidOrder, "trivial quandle needs n ≥ 1");
  return Quandle::validate(Table::generate(n, [](Element x, Element) { return x; }));
}

namespace {

long long positive_mod(long long a, long long n) {
  auto r = a % n;
  return r < 0 ? r + n : r;
}

}  // namespace

Quandle alexander_quandle(std::size_t n, long long t) {
  if (n == 0) throw Error(ErrorCode::InvalidOrder, "Alexander quandle needs n ≥ 1");
  const auto m = static_cast<long long>(n);
  const auto tm = positive_mod(t, m);
  if (std::gcd(tm, m) != 1)
    throw Error(ErrorCode::NonUnitParameter,
                "t = " + std::to_string(t) + " is not a unit mod " + std::to_string(n));
  // Element i represents residue (i + 1) mod n.
  return Quandle::validate(Table::generate(n, [&](Element x, Element y) {
    const long long rx = (x + 1) % m;
    const long long ry = (y + 1) % m;
    const auto r = positive_mod(tm * rx + (1 - tm) * ry, m);
    return positive_mod(r - 1, m);
  }));
}

Quandle product_quandle(const Quandle& q, const Quandle& a) {
  const auto n = q.order();
  const auto m = a.order();
  return Quandle::validate(Table::generate(n * m, [&](Element u, Element v) {
    return q.op(u / m, v / m) * m + a.op(u % m, v % m);
  }));
}

std::vector<Element> subquandle_generated(const Quandle& q, std::span<const Element> seed) {
  if (seed.empty()) throw Error(ErrorCode::EmptySeed, "seed set is empty");
  const auto n = q.order();
  std::vector<char> in(n, 0);
  std::vector<Element> members;
  for (auto x : seed) {
    if (x >= n)
      throw Error(ErrorCode::EntryOutOfRange,
                  "seed element " + std::to_string(x + 1) + " outside 1.." + std::to_string(n));
    if (!in[x]) {
      in[x] = 1;
      members.push_back(x);
    }
  }
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      const auto a = members[i];
      const auto b = members[j];
      for (auto v : {q.op(a, b), q.op(b, a), q.inv(a, b), q.inv(b, a)}) {
        if (!in[v]) {
          in[v] = 1;
          members.push_back(v);
        }
      }
    }
  }
  std::sort(members.begin(), members.end());
  return members;
}

Quandle induced_subquandle(const Quandle& q, std::span<const Element> subset) {
  std::vector<std::ptrdiff_t> position(q.order(), -1);
  for (std::size_t i = 0; i < subset.size(); ++i) position[subset[i]] = static_cast<std::ptrdiff_t>(i);
  return Quandle::validate(Table::generate(subset.size(), [&](Element i, Element j) {
    auto p = position[q.op(subset[i], subset[j])];
    if (p < 0)
      throw Error(ErrorCode::ClosureFailure,
                  "subset not closed: " + format_elements({subset[i], subset[j]}));
    return static_cast<Element>(p);
  }));
}

std::vector<std::pair<unsigned, unsigned>> quandle_profiles(const Quandle& q) {
  const auto n = q.order();
  std::vector<std::pair<unsigned, unsigned>> profiles(n, {0, 0});
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y) {
      if (q.op(x, y) == x) ++profiles[x].first;
      if (q.op(y, x) == y) ++profiles[x].second;
    }
  return profiles;
}

TwoVariablePolynomial quandle_polynomial(const Quandle& q) {
  TwoVariablePolynomial poly;
  for (const auto& [r, c] : quandle_profiles(q)) poly.add_term(r, c);
  return poly;
}

std::vector<std::vector<Element>> enumerate_quandle_homs(const Quandle& src, const Quandle& dst) {
  const Table* s[] = {&src.table()};
  const Table* d[] = {&dst.table()};
  return search_homomorphisms(s, d);
}

std::optional<std::vector<Element>> find_isomorphism(const Quandle& q1, const Quandle& q2) {
  const auto n = q1.order();
  if (n != q2.order()) return std::nullopt;
  if (quandle_polynomial(q1) != quandle_polynomial(q2)) return std::nullopt;
  const auto p1 = quandle_profiles(q1);
  const auto p2 = quandle_profiles(q2);
  SearchOptions options;
  options.bijective = true;
  options.limit = 1;
  options.allowed.assign(n * n, 0);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t v = 0; v < n; ++v) options.allowed[x * n + v] = p1[x] == p2[v];
  const Table* s[] = {&q1.table()};
  const Table* d[] = {&q2.table()};
  auto found = search_homomorphisms(s, d, options);
  if (found.empty()) return std::nullopt;
  return std::move(found.front());
}

bool is_quandle_homomorphism(const Quandle& src, const Quandle& dst, std::span<const Element> map) {
  if (map.size() != src.order()) return false;
  for (auto v : map)
    if (v >= dst.order()) return false;
  const Table* s[] = {&src.table()};
  const Table* d[] = {&dst.table()};
  return preserves_operations(s, d, map);
}

}  // namespace qhom
