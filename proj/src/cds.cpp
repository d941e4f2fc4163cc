#include "dyndom/cds.hpp"

#include <algorithm>
#include <cassert>
#include <string>
#include <unordered_map>
#include <unordered_set>

#include "dyndom/errors.hpp"

namespace dyndom {

ConnectorOverlay::ConnectorOverlay(int n, CdsMode mode, ConnBackend backend,
                                   const std::vector<VertexId>& initial_ds)
    : n_(n),
      mode_(mode),
      conn_(DynamicConnectivity::make(backend, n)),
      conn_g_(DynamicConnectivity::make(backend, n)),
      paths_(n),
      in_ds_(n, 0),
      in_c_(n, 0) {
  // The overlay starts alongside an empty graph, so every initial member is
  // isolated: zero removal components, offset n for the protected flag.
  for (VertexId v : initial_ds) {
    if (v < 0 || v >= n) throw Error(Errc::ParseError, "vertex id out of range");
    if (in_ds_[v]) throw Error(Errc::DuplicateEdge, "repeated initial member");
    in_ds_[v] = 1;
    paths_.set_value(v, n_);
    ++ds_size_;
  }
}

void ConnectorOverlay::sync_graph_inserted(VertexId u, VertexId v) {
  conn_g_->insert_edge(u, v);
}

void ConnectorOverlay::sync_graph_deleted(VertexId u, VertexId v) {
  conn_g_->delete_edge(u, v);
}

std::vector<VertexId> ConnectorOverlay::connector_set() const {
  std::vector<VertexId> out;
  for (int v = 0; v < n_; ++v) {
    if (in_c_[v]) out.push_back(v);
  }
  return out;
}

std::vector<VertexId> ConnectorOverlay::backbone() const {
  std::vector<VertexId> out;
  for (int v = 0; v < n_; ++v) {
    if (in_ds_[v] || in_c_[v]) out.push_back(v);
  }
  return out;
}

std::int64_t ConnectorOverlay::stored_removal_count(VertexId v) {
  return paths_.get_value(v);
}

void ConnectorOverlay::bump(VertexId v, std::int64_t delta) {
  const std::int64_t value = paths_.get_value(v) + delta;
  paths_.set_value(v, value);
  if (mode_ == CdsMode::Fast && in_c_[v] && value <= 1) evict_queue_.push_back(v);
}

bool ConnectorOverlay::bypass_exists(VertexId from, VertexId to, VertexId without) {
  std::unordered_set<VertexId> seen{from};
  std::vector<VertexId> stack{from};
  while (!stack.empty()) {
    VertexId x = stack.back();
    stack.pop_back();
    for (VertexId y : conn_->tracked_neighbors(x)) {
      if (y == to) return true;
      if (y != without && seen.insert(y).second) stack.push_back(y);
    }
  }
  return false;
}

std::vector<VertexId> ConnectorOverlay::uncovered_segments(VertexId from, VertexId to) {
  std::vector<VertexId> path = paths_.path_vertices(from, to);
  const int len = static_cast<int>(path.size());
  if (len < 3) return {};
  std::unordered_map<VertexId, int> pos;
  pos.reserve(path.size());
  for (int i = 0; i < len; ++i) pos.emplace(path[i], i);
  // Every other backbone edge shields the stretch strictly between the
  // projections of its endpoints onto the path. Vertices left unshielded are
  // then confirmed by search, which also catches rescues running through a
  // subtree that hangs off the vertex itself.
  std::vector<int> shield(len + 1, 0);
  for (const auto& [a, b] : conn_->non_tree_edges()) {
    if (!paths_.connected(a, from)) continue;
    int pa = pos.at(paths_.meet(from, to, a));
    int pb = pos.at(paths_.meet(from, to, b));
    if (pa > pb) std::swap(pa, pb);
    if (pb - pa < 2) continue;
    shield[pa + 1] += 1;
    shield[pb] -= 1;
  }
  std::vector<VertexId> out;
  int cover = 0;
  for (int i = 1; i < len - 1; ++i) {
    cover += shield[i];
    if (cover == 0 && !bypass_exists(from, to, path[i])) out.push_back(path[i]);
  }
  return out;
}

void ConnectorOverlay::add_overlay_edge(VertexId u, VertexId v) {
  if (conn_->connected(u, v)) {
    std::vector<VertexId> unc = uncovered_segments(u, v);
    conn_->insert_edge(u, v);
    for (VertexId z : unc) bump(z, -1);
    if (mode_ == CdsMode::Fast) {
      // One vertex on the closed cycle may have become removable; removing it
      // restores everyone else, so a single query suffices. Equal minima mean
      // the choice of victim was arbitrary.
      const auto r = paths_.path_min(u, v);
      if (r.value == 1) {
        if (r.count > 1) ++tie_events_;
        evict_queue_.push_back(r.argmin);
      }
    }
  } else {
    conn_->insert_edge(u, v);
    paths_.link(u, v);
    bump(u, 1);
    bump(v, 1);
  }
}

void ConnectorOverlay::remove_overlay_edge(VertexId u, VertexId v) {
  const auto res = conn_->delete_edge(u, v);
  if (!res.was_tree) {
    for (VertexId z : uncovered_segments(u, v)) bump(z, 1);
    return;
  }
  paths_.cut(u, v);
  if (res.replacement) {
    paths_.link(res.replacement->first, res.replacement->second);
    for (VertexId z : uncovered_segments(u, v)) bump(z, 1);
  } else {
    bump(u, -1);
    bump(v, -1);
  }
}

int ConnectorOverlay::components_without_slow(VertexId v) {
  std::vector<VertexId> comp = conn_->component_vertices(v);
  if (comp.size() == 1) return 0;
  std::unordered_set<VertexId> todo(comp.begin(), comp.end());
  todo.erase(v);
  int pieces = 0;
  while (!todo.empty()) {
    ++pieces;
    VertexId seed = *todo.begin();
    todo.erase(seed);
    std::vector<VertexId> stack{seed};
    while (!stack.empty()) {
      VertexId x = stack.back();
      stack.pop_back();
      for (VertexId y : conn_->tracked_neighbors(x)) {
        if (todo.erase(y)) stack.push_back(y);
      }
    }
  }
  return pieces;
}

void ConnectorOverlay::install_vertex(const DynGraph& g, VertexId v, bool as_ds_member) {
  assert(!in_ds_[v] && !in_c_[v]);
  (as_ds_member ? in_ds_[v] : in_c_[v]) = 1;
  (as_ds_member ? ds_size_ : c_size_) += 1;
  // Sentinel while the incident backbone edges arrive one by one, so the
  // partial counts in between never look like removability.
  paths_.set_value(v, kInstalling);
  std::vector<VertexId> targets;
  for (VertexId w : g.neighbors(v)) {
    if (in_ds_[w] || in_c_[w]) targets.push_back(w);
  }
  std::sort(targets.begin(), targets.end());
  for (VertexId w : targets) add_overlay_edge(v, w);
  paths_.set_value(v, components_without_slow(v) + (as_ds_member ? n_ : 0));
  ++backbone_additions_;
}

void ConnectorOverlay::remove_from_backbone(VertexId v) {
  assert(in_ds_[v] || in_c_[v]);
  std::vector<VertexId> nbs(conn_->tracked_neighbors(v).begin(),
                            conn_->tracked_neighbors(v).end());
  std::sort(nbs.begin(), nbs.end());
  for (VertexId w : nbs) remove_overlay_edge(v, w);
  if (in_ds_[v]) {
    in_ds_[v] = 0;
    --ds_size_;
  } else {
    in_c_[v] = 0;
    --c_size_;
  }
  paths_.set_value(v, 0);
}

void ConnectorOverlay::drain_evictions() {
  while (!evict_queue_.empty()) {
    VertexId c = evict_queue_.front();
    evict_queue_.pop_front();
    // Entries can go stale: later changes may have re-raised the count, or an
    // earlier pass already dropped the vertex. Re-check before acting.
    if (!in_c_[c] || paths_.get_value(c) > 1) continue;
    remove_from_backbone(c);
  }
}

void ConnectorOverlay::on_ds_changed(const DynGraph& g, DsChange change, VertexId v) {
  if (change == DsChange::Entered) {
    if (in_ds_[v]) throw Error(Errc::InternalInconsistency, "vertex already marked as member");
    if (in_c_[v]) {
      // Promotion: already part of the backbone, only the protection flag and
      // the set tallies move.
      in_c_[v] = 0;
      in_ds_[v] = 1;
      --c_size_;
      ++ds_size_;
      bump(v, n_);
    } else {
      install_vertex(g, v, true);
    }
  } else {
    if (!in_ds_[v]) throw Error(Errc::InternalInconsistency, "vertex was not a member");
    const bool keep = mode_ == CdsMode::Fast
                          ? paths_.get_value(v) - n_ >= 2
                          : components_without_slow(v) >= 2;
    if (keep) {
      in_ds_[v] = 0;
      in_c_[v] = 1;
      --ds_size_;
      ++c_size_;
      bump(v, -n_);
    } else {
      remove_from_backbone(v);
    }
  }
  if (mode_ == CdsMode::Fast) drain_evictions();
}

void ConnectorOverlay::on_edge_inserted(const DynGraph& g, VertexId u, VertexId v) {
  (void)g;
  if (!in_backbone(u) || !in_backbone(v)) return;
  if (conn_->has_edge(u, v)) return;  // an install in this round added it already
  add_overlay_edge(u, v);
  if (mode_ == CdsMode::Fast) drain_evictions();
}

void ConnectorOverlay::on_edge_deleted(const DynGraph& g, VertexId u, VertexId v) {
  (void)g;
  if (!conn_->has_edge(u, v)) return;  // an earlier phase already dropped it
  remove_overlay_edge(u, v);
  if (mode_ == CdsMode::Fast) drain_evictions();
}

void ConnectorOverlay::reconnect_components(const DynGraph& g, VertexId rep_a, VertexId rep_b) {
  std::vector<VertexId> side_a = conn_->component_vertices(rep_a);
  std::vector<VertexId> side_b = conn_->component_vertices(rep_b);
  if (side_b.size() < side_a.size() ||
      (side_b.size() == side_a.size() && side_b.front() < side_a.front())) {
    std::swap(side_a, side_b);
    std::swap(rep_a, rep_b);
  }
  const VertexId other_rep = rep_b;
  auto touches_other = [&](VertexId w) {
    for (VertexId z : g.neighbors(w)) {
      if (in_backbone(z) && conn_->connected(z, other_rep)) return true;
    }
    return false;
  };
  auto sorted_neighbors = [&](VertexId x) {
    std::vector<VertexId> nbs(g.neighbors(x).begin(), g.neighbors(x).end());
    std::sort(nbs.begin(), nbs.end());
    return nbs;
  };
  // One outside vertex adjacent to both sides, if any.
  for (VertexId x : side_a) {
    for (VertexId w : sorted_neighbors(x)) {
      if (in_backbone(w)) continue;
      if (touches_other(w)) {
        install_vertex(g, w, false);
        if (mode_ == CdsMode::Fast) drain_evictions();
        return;
      }
    }
  }
  // Otherwise a pair of adjacent outside vertices bridging the two sides.
  for (VertexId x : side_a) {
    for (VertexId w1 : sorted_neighbors(x)) {
      if (in_backbone(w1)) continue;
      for (VertexId w2 : sorted_neighbors(w1)) {
        if (w2 == w1 || in_backbone(w2)) continue;
        if (touches_other(w2)) {
          install_vertex(g, w1, false);
          install_vertex(g, w2, false);
          if (mode_ == CdsMode::Fast) drain_evictions();
          return;
        }
      }
    }
  }
  throw Error(Errc::NoShortConnector, "no one- or two-vertex connector between components");
}

void ConnectorOverlay::finish_update(const DynGraph& g) {
  // First make every graph component carry a single backbone piece again.
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<char> done(n_, 0);
    for (int v = 0; v < n_ && !changed; ++v) {
      if (!in_backbone(v) || done[v]) continue;
      std::vector<VertexId> gcomp = conn_g_->component_vertices(v);
      std::vector<VertexId> reps;
      for (VertexId x : gcomp) {
        done[x] = 1;
        if (!in_backbone(x)) continue;
        bool known = false;
        for (VertexId r : reps) {
          if (conn_->connected(r, x)) {
            known = true;
            break;
          }
        }
        if (!known) reps.push_back(x);
      }
      if (reps.size() < 2) continue;
      // Some pair of pieces sits at graph distance at most three; a specific
      // pair can be farther apart, so try them all before giving up.
      bool merged = false;
      std::string first_failure;
      for (std::size_t i = 0; i < reps.size() && !merged; ++i) {
        for (std::size_t j = i + 1; j < reps.size() && !merged; ++j) {
          try {
            reconnect_components(g, reps[i], reps[j]);
            merged = true;
          } catch (const Error& e) {
            if (e.code() != Errc::NoShortConnector) throw;
            if (first_failure.empty()) first_failure = e.what();
          }
        }
      }
      if (!merged) throw Error(Errc::NoShortConnector, first_failure);
      changed = true;
    }
  }
  if (mode_ == CdsMode::Slow) {
    restore_minimality_slow();
  } else {
    drain_evictions();
  }
}

void ConnectorOverlay::restore_minimality_slow() {
  // A single ascending pass can leave a vertex removable that only became so
  // through a later removal in the same pass, so run passes to a fixpoint.
  bool removed = true;
  while (removed) {
    removed = false;
    for (int v = 0; v < n_; ++v) {
      if (!in_c_[v]) continue;
      if (components_without_slow(v) <= 1) {
        remove_from_backbone(v);
        removed = true;
      }
    }
  }
}

CdsSolver::CdsSolver(int n, CdsMode mode, ConnBackend backend)
    : mds_(n), overlay_(n, mode, backend, [n] {
        std::vector<VertexId> all(n);
        for (int v = 0; v < n; ++v) all[v] = v;
        return all;
      }()) {
  mds_.set_change_listener(
      [this](DsChange change, VertexId v) { pending_.emplace_back(change, v); });
}

void CdsSolver::apply(const DynGraph& g, const UpdateEvent& event) {
  pending_.clear();
  if (event.kind == EventKind::Insert) {
    overlay_.sync_graph_inserted(event.u, event.v);
    mds_.insert_edge(g, event.u, event.v);
  } else {
    overlay_.sync_graph_deleted(event.u, event.v);
    mds_.delete_edge(g, event.u, event.v);
  }
  for (const auto& [change, v] : pending_) overlay_.on_ds_changed(g, change, v);
  if (event.kind == EventKind::Insert) {
    overlay_.on_edge_inserted(g, event.u, event.v);
  } else {
    overlay_.on_edge_deleted(g, event.u, event.v);
  }
  overlay_.finish_update(g);
}

std::int64_t mst_weight(const DynGraph& g, const std::vector<VertexId>& backbone,
                        std::int64_t heavy) {
  const int n = g.num_vertices();
  std::vector<char> in(n, 0);
  for (VertexId v : backbone) in[v] = 1;
  // component counts: whole graph, and induced on the backbone
  auto count = [&](bool induced) {
    std::vector<char> seen(n, 0);
    int comps = 0;
    for (int s = 0; s < n; ++s) {
      if (seen[s] || (induced && !in[s])) continue;
      ++comps;
      seen[s] = 1;
      std::vector<VertexId> stack{s};
      while (!stack.empty()) {
        VertexId x = stack.back();
        stack.pop_back();
        for (VertexId y : g.neighbors(x)) {
          if (seen[y] || (induced && !in[y])) continue;
          seen[y] = 1;
          stack.push_back(y);
        }
      }
    }
    return comps;
  };
  const int c_g = count(false);
  const int c_b = count(true);
  const std::int64_t internal = static_cast<std::int64_t>(backbone.size()) - c_b;
  const std::int64_t attach = static_cast<std::int64_t>(n - c_g) - internal;
  return internal + heavy * attach;
}

}  // namespace dyndom
