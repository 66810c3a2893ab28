#include "qhom/coloring.hpp"

#include "qhom/error.hpp"

#include <algorithm>
#include <deque>

namespace qhom {

std::array<const Table*, 6> relation_tables(const LinkPresentation& p, const Structure& target) {
  std::array<const Table*, 6> t{};
  if (const auto* q = std::get_if<Quandle>(&target)) {
    if (p.kind != PresentationKind::Quandle)
      throw Error(ErrorCode::KindMismatch, "biquandle presentation with a quandle target");
    t[static_cast<int>(RelationOp::Triangle)] = &q->table();
    t[static_cast<int>(RelationOp::TriangleInverse)] = &q->dual_table();
  } else {
    const auto& b = std::get<Biquandle>(target);
    if (p.kind != PresentationKind::Biquandle)
      throw Error(ErrorCode::KindMismatch, "quandle presentation with a biquandle target");
    t[static_cast<int>(RelationOp::B1)] = &b.b1();
    t[static_cast<int>(RelationOp::B2)] = &b.b2();
    t[static_cast<int>(RelationOp::BInv1)] = &b.b_inv1();
    t[static_cast<int>(RelationOp::BInv2)] = &b.b_inv2();
  }
  return t;
}

ColoringPlan plan_coloring(const LinkPresentation& p) {
  const auto g = p.generator_count();
  std::vector<std::vector<std::uint32_t>> neighbours(g);
  for (const auto& r : p.relations)
    for (auto u : {r.output, r.left, r.right})
      for (auto v : {r.output, r.left, r.right})
        if (u != v) neighbours[u].push_back(v);

  // Breadth-first order over all generators, restarting at the lowest
  // unvisited one for each connected piece.
  std::vector<std::uint32_t> order;
  std::vector<char> seen(g, 0);
  for (std::uint32_t start = 0; start < g; ++start) {
    if (seen[start]) continue;
    std::deque<std::uint32_t> queue{start};
    seen[start] = 1;
    while (!queue.empty()) {
      auto u = queue.front();
      queue.pop_front();
      order.push_back(u);
      auto next = neighbours[u];
      std::sort(next.begin(), next.end());
      for (auto v : next)
        if (!seen[v]) {
          seen[v] = 1;
          queue.push_back(v);
        }
    }
  }

  ColoringPlan plan;
  std::vector<char> known(g, 0);
  std::vector<char> scheduled(p.relations.size(), 0);
  std::size_t cursor = 0;
  auto propagate = [&] {
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::uint32_t i = 0; i < p.relations.size(); ++i) {
        if (scheduled[i]) continue;
        const auto& r = p.relations[i];
        if (!known[r.left] || !known[r.right]) continue;
        scheduled[i] = 1;
        changed = true;
        if (known[r.output]) {
          plan.steps.push_back({ColoringPlan::Kind::Check, i});
        } else {
          known[r.output] = 1;
          plan.steps.push_back({ColoringPlan::Kind::Derive, i});
        }
      }
    }
  };
  while (true) {
    while (cursor < order.size() && known[order[cursor]]) ++cursor;
    if (cursor == order.size()) break;
    const auto gen = order[cursor];
    known[gen] = 1;
    plan.free_generators.push_back(gen);
    plan.steps.push_back({ColoringPlan::Kind::Branch, gen});
    propagate();
  }
  return plan;
}

bool satisfies_relations(const LinkPresentation& p, const std::array<const Table*, 6>& tables,
                         const Coloring& c) {
  for (const auto& r : p.relations)
    if ((*tables[static_cast<int>(r.op)])(c[r.left], c[r.right]) != c[r.output]) return false;
  return true;
}

namespace {

class PlanRunner {
 public:
  PlanRunner(const LinkPresentation& p, const ColoringPlan& plan,
             const std::array<const Table*, 6>& tables, std::size_t n)
      : p_(p), plan_(plan), tables_(tables), n_(n) {}

  /// All colorings reachable from step `from` with the given partial assignment.
  std::vector<Coloring> run(std::size_t from, Coloring assignment) const {
    std::vector<Coloring> out;
    descend(from, assignment, out);
    return out;
  }

 private:
  void descend(std::size_t step, Coloring& c, std::vector<Coloring>& out) const {
    if (step == plan_.steps.size()) {
      if (satisfies_relations(p_, tables_, c)) out.push_back(c);
      return;
    }
    const auto& s = plan_.steps[step];
    switch (s.kind) {
      case ColoringPlan::Kind::Branch:
        for (Element v = 0; v < n_; ++v) {
          c[s.index] = v;
          descend(step + 1, c, out);
        }
        return;
      case ColoringPlan::Kind::Derive: {
        const auto& r = p_.relations[s.index];
        c[r.output] = eval(r, c);
        descend(step + 1, c, out);
        return;
      }
      case ColoringPlan::Kind::Check: {
        const auto& r = p_.relations[s.index];
        if (eval(r, c) == c[r.output]) descend(step + 1, c, out);
        return;
      }
    }
  }

  Element eval(const Relation& r, const Coloring& c) const {
    return (*tables_[static_cast<int>(r.op)])(c[r.left], c[r.right]);
  }

  const LinkPresentation& p_;
  const ColoringPlan& plan_;
  const std::array<const Table*, 6>& tables_;
  std::size_t n_;
};

}  // namespace

ColoringSet enumerate_colorings(const LinkPresentation& p, const Structure& target,
                                const ColoringOptions& options) {
  const auto tables = relation_tables(p, target);
  const auto n = order(target);
  const auto plan = plan_coloring(p);
  const PlanRunner runner(p, plan, tables, n);
  ColoringSet set{p, target, {}, plan.free_generators};

  if (plan.steps.empty()) {
    set.colorings.emplace_back();
    return set;
  }
  if (!options.parallel) {
    set.colorings = runner.run(0, Coloring(p.generator_count(), 0));
  } else {
    // The first step is always a branch; split it by value.
    const auto first = plan.steps.front().index;
    std::vector<std::vector<Coloring>> parts(n);
    const auto count = static_cast<std::ptrdiff_t>(n);
#pragma omp parallel for schedule(dynamic)
    for (std::ptrdiff_t v = 0; v < count; ++v) {
      Coloring c(p.generator_count(), 0);
      c[first] = static_cast<Element>(v);
      parts[v] = runner.run(1, std::move(c));
    }
    for (auto& part : parts)
      set.colorings.insert(set.colorings.end(), std::make_move_iterator(part.begin()),
                           std::make_move_iterator(part.end()));
  }
  std::sort(set.colorings.begin(), set.colorings.end());
  return set;
}

std::size_t counting_invariant(const LinkPresentation& p, const Structure& target) {
  return enumerate_colorings(p, target).size();
}

}  // namespace qhom
