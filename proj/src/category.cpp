#include "qhom/category.hpp"

#include "qhom/error.hpp"
#include "qhom/hom_construct.hpp"

#include <algorithm>
#include <cstdint>

namespace qhom {

namespace {

void require_abelian(const Quandle& q, const char* name) {
  const auto& check = q.abelian_check();
  if (check) return;
  std::vector<std::size_t> wit(check.witness->begin(), check.witness->end());
  throw Error(ErrorCode::NotAbelian,
              std::string(name) + " is not abelian: medial law fails at " + format_elements(wit),
              wit);
}

[[noreturn]] void witness_failure(const std::string& stage, const std::string& detail,
                                  std::vector<std::size_t> witness = {}) {
  throw Error(ErrorCode::WitnessFailure, stage + ": " + detail, std::move(witness));
}

class BihomSearch {
 public:
  BihomSearch(const Quandle& q, const Quandle& a, const Quandle& x)
      : q_(q), x_(x), rows_(enumerate_quandle_homs(a, x)), width_(a.order()) {
    // checks_[i]: pairs (i', k') whose three rows are all assigned once row i is.
    const auto n = q.order();
    checks_.resize(n);
    for (Element i = 0; i < n; ++i)
      for (Element k = 0; k < n; ++k)
        checks_[std::max({i, k, q.op(i, k)})].push_back({i, k});
    choice_.resize(n);
  }

  std::vector<Bihomomorphism> run() {
    descend(0);
    return std::move(out_);
  }

 private:
  void descend(std::size_t row) {
    if (row == q_.order()) {
      Bihomomorphism f;
      f.reserve(q_.order() * width_);
      for (auto c : choice_) f.insert(f.end(), rows_[c].begin(), rows_[c].end());
      out_.push_back(std::move(f));
      return;
    }
    for (std::size_t c = 0; c < rows_.size(); ++c) {
      choice_[row] = c;
      if (columns_ok(row)) descend(row + 1);
    }
  }

  bool columns_ok(std::size_t row) const {
    for (const auto& [i, k] : checks_[row]) {
      const auto& ri = rows_[choice_[i]];
      const auto& rk = rows_[choice_[k]];
      const auto& rik = rows_[choice_[q_.op(i, k)]];
      for (std::size_t j = 0; j < width_; ++j)
        if (rik[j] != x_.op(ri[j], rk[j])) return false;
    }
    return true;
  }

  const Quandle& q_;
  const Quandle& x_;
  std::vector<std::vector<Element>> rows_;
  std::size_t width_;
  std::vector<std::vector<std::pair<Element, Element>>> checks_;
  std::vector<std::size_t> choice_;
  std::vector<Bihomomorphism> out_;
};

}  // namespace

std::vector<Bihomomorphism> enumerate_bihomomorphisms(const Quandle& q, const Quandle& a,
                                                      const Quandle& x) {
  require_abelian(q, "Q");
  require_abelian(a, "A");
  require_abelian(x, "X");
  return BihomSearch(q, a, x).run();
}

namespace {

/// Dense index of vectors over [0, radix) of a fixed length, or -1 if absent.
class DenseIndex {
 public:
  DenseIndex(const std::vector<std::vector<Element>>& items, std::size_t radix, std::size_t length)
      : radix_(radix) {
    std::size_t size = 1;
    for (std::size_t i = 0; i < length; ++i) size *= radix;
    slot_.assign(size, -1);
    for (std::size_t i = 0; i < items.size(); ++i) slot_[code(items[i])] = static_cast<std::int64_t>(i);
  }

  std::size_t code(const std::vector<Element>& v) const {
    std::size_t c = 0;
    for (auto e : v) c = c * radix_ + e;
    return c;
  }

  std::int64_t at(std::size_t code) const { return slot_[code]; }

 private:
  std::size_t radix_;
  std::vector<std::int64_t> slot_;
};

}  // namespace

AdjunctionWitness check_adjunction(const Quandle& q, const Quandle& a, const Quandle& x) {
  const auto bihoms = enumerate_bihomomorphisms(q, a, x);
  const auto inner = hom_quandle_from_finite(a, x);
  const auto homs = enumerate_quandle_homs(q, inner.structure);
  const auto nq = q.order();
  const auto na = a.order();
  const auto& H = inner.structure;

  const DenseIndex rows(inner.colorings, x.order(), na);
  const DenseIndex hom_index(homs, H.order(), nq);
  const DenseIndex bihom_index(bihoms, x.order(), nq * na);

  std::vector<Element> curry;
  curry.reserve(bihoms.size());
  std::vector<char> hit(homs.size(), 0);
  for (std::size_t b = 0; b < bihoms.size(); ++b) {
    std::vector<Element> curried(nq);
    for (Element i = 0; i < nq; ++i) {
      std::vector<Element> row(bihoms[b].begin() + i * na, bihoms[b].begin() + (i + 1) * na);
      const auto r = rows.at(rows.code(row));
      if (r < 0) witness_failure("well-defined", "row is not a homomorphism A → X", {b, i});
      curried[i] = static_cast<Element>(r);
    }
    const auto index = hom_index.at(hom_index.code(curried));
    if (index < 0)
      witness_failure("well-defined", "curried map is not a homomorphism Q → Hom(A, X)", {b});
    if (hit[index]) witness_failure("injective", "two bihomomorphisms curry alike", {b});
    hit[index] = 1;
    curry.push_back(static_cast<Element>(index));
  }
  if (auto miss = std::find(hit.begin(), hit.end(), 0); miss != hit.end())
    witness_failure("surjective", "homomorphism Q → Hom(A, X) has no preimage",
                    {static_cast<std::size_t>(miss - hit.begin())});

  // Uncurrying each homomorphism lands back on the bihomomorphism it came from.
  for (std::size_t b = 0; b < bihoms.size(); ++b) {
    Bihomomorphism f;
    for (auto r : homs[curry[b]])
      f.insert(f.end(), inner.colorings[r].begin(), inner.colorings[r].end());
    if (f != bihoms[b]) witness_failure("round-trip", "uncurry(curry(f)) ≠ f", {b});
  }

  // curry(f ▷ g) = curry(f) ▷ curry(g), pointwise on both sides.
  const auto m = bihoms.size();
  const auto cells = nq * na;
  const auto radix_x = x.order();
  const auto radix_h = H.order();
  std::vector<std::ptrdiff_t> bad(m, -1);
  const auto count = static_cast<std::ptrdiff_t>(m);
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t f = 0; f < count; ++f) {
    const auto& ff = bihoms[f];
    const auto& cf = homs[curry[f]];
    for (std::size_t g = 0; g < m; ++g) {
      const auto& fg = bihoms[g];
      std::size_t code = 0;
      for (std::size_t c = 0; c < cells; ++c) code = code * radix_x + x.op(ff[c], fg[c]);
      const auto product = bihom_index.at(code);
      const auto& cg = homs[curry[g]];
      std::size_t hcode = 0;
      for (std::size_t i = 0; i < nq; ++i) hcode = hcode * radix_h + H.op(cf[i], cg[i]);
      if (product < 0 || hom_index.at(hcode) != static_cast<std::int64_t>(curry[product])) {
        bad[f] = static_cast<std::ptrdiff_t>(g);
        break;
      }
    }
  }
  for (std::size_t f = 0; f < m; ++f)
    if (bad[f] >= 0)
      witness_failure("isomorphism", "currying does not preserve the pointwise operation",
                      {f, static_cast<std::size_t>(bad[f])});
  return {bihoms.size(), homs.size(), std::move(curry)};
}

bool unit_law_holds(const Quandle& a, const Quandle& x) {
  return enumerate_bihomomorphisms(trivial_quandle(1), a, x) == enumerate_quandle_homs(a, x);
}

bool swap_symmetry_holds(const Quandle& q, const Quandle& a, const Quandle& x) {
  const auto left = enumerate_bihomomorphisms(q, a, x);
  const auto right = enumerate_bihomomorphisms(a, q, x);
  if (left.size() != right.size()) return false;
  const auto nq = q.order();
  const auto na = a.order();
  std::vector<Bihomomorphism> transposed;
  transposed.reserve(left.size());
  for (const auto& f : left) {
    Bihomomorphism t(f.size());
    for (std::size_t i = 0; i < nq; ++i)
      for (std::size_t j = 0; j < na; ++j) t[j * nq + i] = f[i * na + j];
    transposed.push_back(std::move(t));
  }
  std::sort(transposed.begin(), transposed.end());
  return transposed == right;
}

}  // namespace qhom
