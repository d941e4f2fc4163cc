#include "dyndom/minimal_ds.hpp"

#include <cmath>
#include <string>

namespace dyndom {

namespace {
std::int64_t isqrt(std::int64_t x) {
  auto r = static_cast<std::int64_t>(std::sqrt(static_cast<double>(x)));
  while (r > 0 && r * r > x) --r;
  while ((r + 1) * (r + 1) <= x) ++r;
  return r;
}

// deg <= 2*sqrt(m) + 1, exactly in integers.
bool within_selection_bound(std::int64_t deg, std::int64_t m) {
  return deg <= 1 || (deg - 1) * (deg - 1) <= 4 * m;
}
}  // namespace

MinimalDominatingSet::MinimalDominatingSet(int n)
    : n_(n), in_d_(n, 1), nd_(n), only_(n), budget_(n, 0), d_size_(n) {
  // On the empty graph every vertex dominates exactly itself.
  for (VertexId v = 0; v < n; ++v) {
    nd_[v].insert(v);
    only_[v].insert(v);
  }
}

std::vector<VertexId> MinimalDominatingSet::ds_members() const {
  std::vector<VertexId> out;
  for (VertexId v = 0; v < n_; ++v)
    if (in_d_[v]) out.push_back(v);
  return out;
}

void MinimalDominatingSet::insert_dominator(VertexId u, VertexId d,
                                            std::vector<VertexId>& redundant) {
  ++ops_;
  if (nd_[u].size() == 1) {
    const VertexId w = *nd_[u].begin();
    ++ops_;
    only_[w].erase(u);
    if (only_[w].empty() && in_d_[w]) redundant.push_back(w);
  }
  nd_[u].insert(d);
  if (nd_[u].size() == 1) {
    ++ops_;
    only_[d].insert(u);
  }
}

void MinimalDominatingSet::erase_dominator(VertexId u, VertexId d) {
  ++ops_;
  const bool was_single = nd_[u].size() == 1;
  if (nd_[u].erase(d) == 0) return;
  if (was_single) {
    ++ops_;
    only_[d].erase(u);
  }
  if (nd_[u].size() == 1) {
    ++ops_;
    only_[*nd_[u].begin()].insert(u);
  }
}

void MinimalDominatingSet::drain_redundant(const DynGraph& g, std::vector<VertexId>& redundant) {
  for (std::size_t i = 0; i < redundant.size(); ++i) {
    const VertexId w = redundant[i];
    if (in_d_[w] && only_[w].empty()) remove_from_ds(g, w);
  }
  redundant.clear();
}

void MinimalDominatingSet::add_to_ds(const DynGraph& g, VertexId v) {
  if (in_d_[v]) throw Error(Errc::AlreadyMember, "vertex " + std::to_string(v));
  in_d_[v] = 1;
  ++d_size_;
  ++membership_changes_;
  only_[v].clear();
  std::vector<VertexId> redundant;
  insert_dominator(v, v, redundant);
  for (VertexId u : g.neighbors(v)) insert_dominator(u, v, redundant);
  budget_[v] = g.degree(v);
  drain_redundant(g, redundant);
}

void MinimalDominatingSet::remove_from_ds(const DynGraph& g, VertexId v) {
  if (!in_d_[v]) throw Error(Errc::AlreadyMember, "vertex " + std::to_string(v) + " not a member");
  if (!only_[v].empty())
    throw Error(Errc::StillNeeded, "vertex " + std::to_string(v) + " privately dominates " +
                                       std::to_string(*only_[v].begin()));
  in_d_[v] = 0;
  --d_size_;
  ++membership_changes_;
  erase_dominator(v, v);
  for (VertexId u : g.neighbors(v)) erase_dominator(u, v);
}

void MinimalDominatingSet::insert_edge(const DynGraph& g, VertexId u, VertexId v) {
  if (in_d_[u]) ++budget_[u];
  if (in_d_[v]) ++budget_[v];
  std::vector<VertexId> redundant;
  if (in_d_[u] && in_d_[v]) {
    // First endpoint first: u may turn out to be needed only for itself.
    insert_dominator(u, v, redundant);
    drain_redundant(g, redundant);
    if (in_d_[u]) {
      insert_dominator(v, u, redundant);
      drain_redundant(g, redundant);
    }
  } else if (in_d_[u] != in_d_[v]) {
    const VertexId member = in_d_[u] ? u : v;
    const VertexId other = in_d_[u] ? v : u;
    insert_dominator(other, member, redundant);
    drain_redundant(g, redundant);
  }
}

void MinimalDominatingSet::delete_edge(const DynGraph& g, VertexId u, VertexId v) {
  if (in_d_[u] && in_d_[v]) {
    erase_dominator(u, v);
    erase_dominator(v, u);
    return;
  }
  if (in_d_[u] == in_d_[v]) return;
  const VertexId member = in_d_[u] ? u : v;
  const VertexId other = in_d_[u] ? v : u;
  erase_dominator(other, member);
  if (nd_[other].empty()) {
    if (only_[member].empty()) remove_from_ds(g, member);
    const VertexId w = choose_dominator(g, other);
    add_to_ds(g, w);
  }
}

VertexId MinimalDominatingSet::choose_dominator(const DynGraph& g, VertexId u) {
  const std::int64_t m = g.current_edges();
  ++selections_;
  if (within_selection_bound(g.degree(u), m)) return u;
  const std::int64_t window = 2 * isqrt(m) + 1;
  std::int64_t scanned = 0;
  for (VertexId w : g.neighbors(u)) {
    if (scanned++ >= window) break;
    ++ops_;
    const std::int64_t dw = g.degree(w);
    if (dw * dw <= m) {
      if (!within_selection_bound(dw, m)) ++selection_violations_;
      return w;
    }
  }
  throw Error(Errc::InternalInconsistency,
              "no low-degree dominator among the first " + std::to_string(window) +
                  " neighbors of " + std::to_string(u));
}

}  // namespace dyndom
