#include "dyndom/oracle.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "dyndom/errors.hpp"

namespace dyndom::oracle {

namespace {

std::vector<std::uint32_t> closed_neighborhood_masks(const DynGraph& g) {
  const int n = g.num_vertices();
  std::vector<std::uint32_t> masks(n);
  for (int v = 0; v < n; ++v) {
    std::uint32_t m = 1u << v;
    for (VertexId w : g.neighbors(v)) m |= 1u << w;
    masks[v] = m;
  }
  return masks;
}

bool covers_all(const DynGraph& g, const std::vector<bool>& in_set) {
  const int n = g.num_vertices();
  for (int v = 0; v < n; ++v) {
    if (in_set[v]) continue;
    bool dominated = false;
    for (VertexId w : g.neighbors(v)) {
      if (in_set[w]) {
        dominated = true;
        break;
      }
    }
    if (!dominated) return false;
  }
  return true;
}

std::vector<bool> to_flags(int n, const std::vector<VertexId>& set) {
  std::vector<bool> flags(n, false);
  for (VertexId v : set) {
    if (v >= 0 && v < n) flags[v] = true;
  }
  return flags;
}

/// First dominating combination in lexicographic order of sorted vertex
/// lists, searched by increasing size; empty optional when no size-k set
/// works.
std::optional<std::vector<VertexId>> first_feasible_combination(
    int n, int k, const std::vector<std::uint32_t>& masks, std::uint32_t full,
    const std::function<bool(const std::vector<VertexId>&)>& extra_ok) {
  std::vector<VertexId> pick(k);
  std::function<std::optional<std::vector<VertexId>>(int, int, std::uint32_t)> rec =
      [&](int idx, int from, std::uint32_t cover) -> std::optional<std::vector<VertexId>> {
    if (idx == k) {
      if (cover == full && extra_ok(pick)) return pick;
      return std::nullopt;
    }
    for (int v = from; v <= n - (k - idx); ++v) {
      pick[idx] = v;
      if (auto r = rec(idx + 1, v + 1, cover | masks[v])) return r;
    }
    return std::nullopt;
  };
  return rec(0, 0, 0);
}

bool induces_connected(const DynGraph& g, const std::vector<VertexId>& set) {
  if (set.empty()) return false;
  std::unordered_set<VertexId> in(set.begin(), set.end());
  std::vector<VertexId> reach{set.front()};
  std::unordered_set<VertexId> seen{set.front()};
  for (std::size_t i = 0; i < reach.size(); ++i) {
    for (VertexId w : g.neighbors(reach[i])) {
      if (in.count(w) && seen.insert(w).second) reach.push_back(w);
    }
  }
  return seen.size() == set.size();
}

}  // namespace

bool is_dominating(const DynGraph& g, const std::vector<VertexId>& ds) {
  return covers_all(g, to_flags(g.num_vertices(), ds));
}

bool is_minimal_dominating(const DynGraph& g, const std::vector<VertexId>& ds) {
  std::vector<bool> flags = to_flags(g.num_vertices(), ds);
  if (!covers_all(g, flags)) return false;
  for (VertexId v : ds) {
    flags[v] = false;
    const bool still = covers_all(g, flags);
    flags[v] = true;
    if (still) return false;
  }
  return true;
}

std::vector<VertexId> component_labels(const DynGraph& g) {
  const int n = g.num_vertices();
  std::vector<VertexId> label(n, -1);
  for (int s = 0; s < n; ++s) {
    if (label[s] != -1) continue;
    std::vector<VertexId> stack{s};
    label[s] = s;
    while (!stack.empty()) {
      VertexId x = stack.back();
      stack.pop_back();
      for (VertexId y : g.neighbors(x)) {
        if (label[y] == -1) {
          label[y] = s;
          stack.push_back(y);
        }
      }
    }
  }
  return label;
}

int count_components(const DynGraph& g) {
  std::vector<VertexId> label = component_labels(g);
  std::unordered_set<VertexId> uniq(label.begin(), label.end());
  return static_cast<int>(uniq.size());
}

int components_without_vertex(const DynGraph& g, const std::vector<VertexId>& subset, VertexId v) {
  std::unordered_set<VertexId> in(subset.begin(), subset.end());
  if (!in.count(v)) throw Error(Errc::ParseError, "vertex not in subset");
  // v's component within the induced subgraph
  std::unordered_set<VertexId> comp{v};
  std::vector<VertexId> stack{v};
  while (!stack.empty()) {
    VertexId x = stack.back();
    stack.pop_back();
    for (VertexId y : g.neighbors(x)) {
      if (in.count(y) && comp.insert(y).second) stack.push_back(y);
    }
  }
  if (comp.size() == 1) return 0;
  comp.erase(v);
  int pieces = 0;
  std::unordered_set<VertexId> seen;
  for (VertexId s : comp) {
    if (seen.count(s)) continue;
    ++pieces;
    seen.insert(s);
    std::vector<VertexId> bfs{s};
    while (!bfs.empty()) {
      VertexId x = bfs.back();
      bfs.pop_back();
      for (VertexId y : g.neighbors(x)) {
        if (y != v && comp.count(y) && seen.insert(y).second) bfs.push_back(y);
      }
    }
  }
  return pieces;
}

std::vector<VertexId> exact_min_dominating_set(const DynGraph& g) {
  const int n = g.num_vertices();
  if (n > 20) throw Error(Errc::TooLarge, "exact search limited to 20 vertices");
  auto masks = closed_neighborhood_masks(g);
  const std::uint32_t full = n == 32 ? ~0u : (1u << n) - 1;
  for (int k = 1; k <= n; ++k) {
    if (auto r = first_feasible_combination(n, k, masks, full,
                                            [](const std::vector<VertexId>&) { return true; }))
      return *r;
  }
  throw Error(Errc::InternalInconsistency, "no dominating set found");
}

std::vector<VertexId> exact_min_connected_dominating_set(const DynGraph& g) {
  const int n = g.num_vertices();
  if (n > 14) throw Error(Errc::TooLarge, "exact search limited to 14 vertices");
  if (count_components(g) != 1) throw Error(Errc::Disconnected, "graph is not connected");
  if (n == 1) return {0};
  auto masks = closed_neighborhood_masks(g);
  const std::uint32_t full = (1u << n) - 1;
  for (int k = 1; k <= n; ++k) {
    if (auto r = first_feasible_combination(
            n, k, masks, full,
            [&](const std::vector<VertexId>& pick) { return induces_connected(g, pick); }))
      return *r;
  }
  throw Error(Errc::InternalInconsistency, "no connected dominating set found");
}

std::vector<VertexId> greedy_dominating_set(const DynGraph& g) {
  const int n = g.num_vertices();
  std::vector<bool> covered(n, false);
  std::vector<VertexId> out;
  int remaining = n;
  while (remaining > 0) {
    VertexId best = -1;
    int best_gain = -1;
    for (int v = 0; v < n; ++v) {
      int gain = covered[v] ? 0 : 1;
      for (VertexId w : g.neighbors(v)) {
        if (!covered[w]) ++gain;
      }
      if (gain > best_gain) {
        best_gain = gain;
        best = v;
      }
    }
    out.push_back(best);
    if (!covered[best]) {
      covered[best] = true;
      --remaining;
    }
    for (VertexId w : g.neighbors(best)) {
      if (!covered[w]) {
        covered[w] = true;
        --remaining;
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<std::string> check_level_solution(const DynGraph& g, const LevelSolution& sol) {
  const int n = g.num_vertices();
  std::ostringstream why;
  std::vector<int> owner_seen(n, 0);
  std::unordered_map<VertexId, int> heads;
  for (const auto& [id, pair] : sol.pairs()) {
    if (pair.dom.empty()) {
      why << "pair " << id << " is empty";
      return why.str();
    }
    if (pair.level < 1 || pair.level > sol.level_cap()) {
      why << "pair " << id << " level " << pair.level << " outside [1, " << sol.level_cap() << "]";
      return why.str();
    }
    if (pair.level > 10) {
      const std::size_t lower = std::size_t{1} << (pair.level - 10);
      if (pair.dom.size() < lower) {
        why << "pair " << id << " at level " << pair.level << " has only " << pair.dom.size()
            << " members, below " << lower;
        return why.str();
      }
    }
    const std::size_t upper = std::size_t{1} << pair.level;
    if (pair.dom.size() > upper) {
      why << "pair " << id << " at level " << pair.level << " has " << pair.dom.size()
          << " members, above " << upper;
      return why.str();
    }
    ++heads[pair.dominant];
    for (VertexId x : pair.dom) {
      if (x != pair.dominant && !g.has_edge(x, pair.dominant)) {
        why << "vertex " << x << " in pair " << id << " is not adjacent to dominant "
            << pair.dominant;
        return why.str();
      }
      ++owner_seen[x];
      if (sol.owner_pair(x) != id) {
        why << "vertex " << x << " owner record disagrees with pair " << id;
        return why.str();
      }
      if (sol.level_of(x) != pair.level) {
        why << "vertex " << x << " level record disagrees with pair " << id;
        return why.str();
      }
    }
  }
  for (int v = 0; v < n; ++v) {
    if (owner_seen[v] != 1) {
      why << "vertex " << v << " appears in " << owner_seen[v] << " pairs";
      return why.str();
    }
    const int mult = sol.multiplicity_of(v);
    const int actual = heads.count(v) ? heads.at(v) : 0;
    if (mult != actual) {
      why << "vertex " << v << " multiplicity " << mult << " but heads " << actual << " pairs";
      return why.str();
    }
    if (sol.in_ds(v) != (actual > 0)) {
      why << "vertex " << v << " membership flag disagrees with pair heads";
      return why.str();
    }
  }
  // Stability plus counter agreement: recount closed neighborhoods per level.
  for (int v = 0; v < n; ++v) {
    std::unordered_map<int, int> per_level;
    ++per_level[sol.level_of(v)];
    for (VertexId w : g.neighbors(v)) ++per_level[sol.level_of(w)];
    for (int l = 1; l <= sol.level_cap(); ++l) {
      const int actual = per_level.count(l) ? per_level.at(l) : 0;
      if (sol.counter(v, l) != actual) {
        why << "counter of vertex " << v << " at level " << l << " is " << sol.counter(v, l)
            << ", recount " << actual;
        return why.str();
      }
      if (actual > (1 << l)) {
        why << "vertex " << v << " sees " << actual << " level-" << l
            << " vertices, above cap " << (1 << l);
        return why.str();
      }
    }
  }
  std::vector<VertexId> members = sol.view().members;
  if (!is_dominating(g, members)) return "level solution members are not dominating";
  return std::nullopt;
}

std::optional<std::string> check_minimal_state(const DynGraph& g, const MinimalDominatingSet& mds) {
  const int n = g.num_vertices();
  std::ostringstream why;
  std::vector<bool> in(n, false);
  for (VertexId v : mds.ds_members()) in[v] = true;
  for (int u = 0; u < n; ++u) {
    std::unordered_set<VertexId> nd;
    if (in[u]) nd.insert(u);
    for (VertexId w : g.neighbors(u)) {
      if (in[w]) nd.insert(w);
    }
    if (nd != mds.dominators_of(u)) {
      why << "dominator set of vertex " << u << " disagrees with recount";
      return why.str();
    }
    if (nd.empty()) {
      why << "vertex " << u << " has no dominator";
      return why.str();
    }
  }
  for (int v = 0; v < n; ++v) {
    std::unordered_set<VertexId> only;
    for (VertexId u : g.neighbors(v)) {
      if (mds.dominators_of(u).size() == 1 && mds.dominators_of(u).count(v)) only.insert(u);
    }
    if (mds.dominators_of(v).size() == 1 && mds.dominators_of(v).count(v)) only.insert(v);
    if (only != mds.privately_dominated(v)) {
      why << "privately dominated set of vertex " << v << " disagrees with recount";
      return why.str();
    }
    if (in[v] && only.empty()) {
      why << "member " << v << " dominates nothing privately";
      return why.str();
    }
  }
  if (!is_minimal_dominating(g, mds.ds_members())) return "maintained set is not minimal dominating";
  return std::nullopt;
}

std::optional<std::string> connectors_all_articulation(const DynGraph& g,
                                                       const std::vector<VertexId>& ds,
                                                       const std::vector<VertexId>& connectors) {
  std::ostringstream why;
  std::unordered_set<VertexId> ds_set(ds.begin(), ds.end());
  std::vector<VertexId> backbone = ds;
  for (VertexId c : connectors) {
    if (ds_set.count(c)) {
      why << "connector " << c << " also sits in the dominating set";
      return why.str();
    }
    backbone.push_back(c);
  }
  for (VertexId c : connectors) {
    if (components_without_vertex(g, backbone, c) < 2) {
      why << "connector " << c << " is not an articulation point of its backbone component";
      return why.str();
    }
  }
  return std::nullopt;
}

std::optional<std::string> backbone_connected_per_component(const DynGraph& g,
                                                            const std::vector<VertexId>& ds,
                                                            const std::vector<VertexId>& connectors) {
  std::ostringstream why;
  std::vector<VertexId> backbone = ds;
  backbone.insert(backbone.end(), connectors.begin(), connectors.end());
  std::unordered_set<VertexId> in(backbone.begin(), backbone.end());
  std::vector<VertexId> g_label = component_labels(g);
  // Label backbone vertices by induced-backbone component, then require one
  // backbone label per graph component.
  std::unordered_map<VertexId, VertexId> b_label;
  for (VertexId s : backbone) {
    if (b_label.count(s)) continue;
    b_label[s] = s;
    std::vector<VertexId> stack{s};
    while (!stack.empty()) {
      VertexId x = stack.back();
      stack.pop_back();
      for (VertexId y : g.neighbors(x)) {
        if (in.count(y) && !b_label.count(y)) {
          b_label[y] = s;
          stack.push_back(y);
        }
      }
    }
  }
  std::unordered_map<VertexId, VertexId> comp_to_blabel;
  for (VertexId v : backbone) {
    auto [it, fresh] = comp_to_blabel.emplace(g_label[v], b_label[v]);
    if (!fresh && it->second != b_label[v]) {
      why << "graph component of vertex " << v << " carries a split backbone";
      return why.str();
    }
  }
  return std::nullopt;
}

}  // namespace dyndom::oracle
