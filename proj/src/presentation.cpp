#include "qhom/presentation.hpp"

#include <map>
#include <numeric>

namespace qhom {

std::string_view to_string(RelationOp op) {
  switch (op) {
    case RelationOp::Triangle: return "op";
    case RelationOp::TriangleInverse: return "inv";
    case RelationOp::B1: return "B1";
    case RelationOp::B2: return "B2";
    case RelationOp::BInv1: return "Binv1";
    case RelationOp::BInv2: return "Binv2";
  }
  return "?";
}

namespace {

PDCode resolved(const PDCode& pd) { return pd.signs_resolved() ? pd : infer_signs(pd); }

void add_free_loops(const PDCode& pd, std::size_t first_component, LinkPresentation& p) {
  std::size_t component = first_component;
  for (auto k : pd.free_loops) {
    p.generators.push_back({k});
    p.component_of.push_back(component++);
  }
  p.component_count = component;
}

}  // namespace

LinkPresentation quandle_presentation(const PDCode& input, bool mirror) {
  const auto pd = resolved(input);
  const auto edges = pd.edge_count();
  const auto comps = edge_components(pd);

  std::vector<unsigned> parent(edges + 1);
  std::iota(parent.begin(), parent.end(), 0u);
  auto find = [&](unsigned e) {
    while (parent[e] != e) e = parent[e] = parent[parent[e]];
    return e;
  };
  for (const auto& x : pd.crossings) {
    auto a = find(x.edges[1]);
    auto b = find(x.edges[3]);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }

  LinkPresentation p;
  p.kind = PresentationKind::Quandle;
  std::map<unsigned, std::uint32_t> arc_of_root;
  std::vector<std::uint32_t> arc(edges + 1);
  for (unsigned e = 1; e <= edges; ++e) {
    auto [it, fresh] = arc_of_root.try_emplace(find(e), static_cast<std::uint32_t>(p.generators.size()));
    if (fresh) {
      p.generators.emplace_back();
      p.component_of.push_back(comps.component[e - 1]);
    }
    p.generators[it->second].push_back(e);
    arc[e] = it->second;
  }
  for (std::size_t i = 0; i < pd.crossings.size(); ++i) {
    const auto& x = pd.crossings[i];
    const bool triangle = (x.sign > 0) != mirror;
    p.relations.push_back({triangle ? RelationOp::Triangle : RelationOp::TriangleInverse,
                           arc[x.under_out()], arc[x.under_in()], arc[x.over_in()], i, x.sign});
  }
  add_free_loops(pd, comps.count, p);
  return p;
}

LinkPresentation biquandle_presentation(const PDCode& input, bool mirror) {
  const auto pd = resolved(input);
  const auto edges = pd.edge_count();
  const auto comps = edge_components(pd);

  LinkPresentation p;
  p.kind = PresentationKind::Biquandle;
  for (unsigned e = 1; e <= edges; ++e) {
    p.generators.push_back({e});
    p.component_of.push_back(comps.component[e - 1]);
  }
  auto g = [](unsigned e) { return static_cast<std::uint32_t>(e - 1); };
  for (std::size_t i = 0; i < pd.crossings.size(); ++i) {
    const auto& x = pd.crossings[i];
    const auto ui = g(x.under_in()), uo = g(x.under_out());
    const auto oi = g(x.over_in()), oo = g(x.over_out());
    if ((x.sign > 0) != mirror) {
      p.relations.push_back({RelationOp::B1, oo, ui, oi, i, x.sign});
      p.relations.push_back({RelationOp::B2, uo, ui, oi, i, x.sign});
    } else {
      p.relations.push_back({RelationOp::BInv1, uo, oi, ui, i, x.sign});
      p.relations.push_back({RelationOp::BInv2, oo, oi, ui, i, x.sign});
    }
  }
  add_free_loops(pd, comps.count, p);
  return p;
}

}  // namespace qhom
