#include "dyndom/mds.hpp"

#include <bit>
#include <string>

namespace dyndom {

namespace {
constexpr std::int64_t pow2(int l) { return std::int64_t{1} << l; }

int floor_log2(std::int64_t c) { return std::bit_width(static_cast<std::uint64_t>(c)) - 1; }

int ceil_log2(std::int64_t c) {
  return c <= 1 ? 0 : std::bit_width(static_cast<std::uint64_t>(c - 1));
}
}  // namespace

int level_cap_for(int n) { return ceil_log2(n) + 10; }

int lowest_level(std::int64_t cardinality) { return std::max(1, ceil_log2(cardinality)); }

int highest_level(std::int64_t cardinality, int level_cap) {
  return std::min(level_cap, floor_log2(cardinality) + 10);
}

LevelSolution::LevelSolution(int n)
    : n_(n),
      l_max_(level_cap_for(n)),
      owner_(n, -1),
      level_of_(n, 1),
      cnt_(n, std::vector<std::int64_t>(static_cast<std::size_t>(l_max_) + 1, 0)),
      multiplicity_(n, 0),
      queued_(n, std::vector<char>(static_cast<std::size_t>(l_max_) + 1, 0)) {
  // Every vertex starts in its own singleton pair at level 1.
  for (VertexId v = 0; v < n; ++v) {
    const int id = fresh_pair_id();
    pairs_.emplace(id, DominatingPair{id, v, {v}, 1});
    owner_[v] = id;
    cnt_[v][1] = 1;
    multiplicity_[v] = 1;
  }
  ds_size_ = n;
}

void LevelSolution::bump_multiplicity(VertexId v, int delta) {
  const int before = multiplicity_[v];
  multiplicity_[v] += delta;
  if (before == 0 && multiplicity_[v] > 0) {
    ++ds_size_;
    ++membership_changes_;
    ++level_changes_;  // a membership transition counts as a level event
    if (listener_) listener_(DsChange::Entered, v);
  } else if (before > 0 && multiplicity_[v] == 0) {
    --ds_size_;
    ++membership_changes_;
    ++level_changes_;
    if (listener_) listener_(DsChange::Left, v);
  }
}

void LevelSolution::note_counter_increase(VertexId v, int level) {
  if (cnt_[v][level] > pow2(level) && !queued_[v][level]) {
    queued_[v][level] = 1;
    violations_.emplace_back(v, level);
  }
}

void LevelSolution::shift_vertex_level(const DynGraph& g, VertexId x, int from, int to) {
  if (from == to) return;
  level_of_[x] = to;
  --cnt_[x][from];
  ++cnt_[x][to];
  note_counter_increase(x, to);
  for (VertexId w : g.neighbors(x)) {
    --cnt_[w][from];
    ++cnt_[w][to];
    note_counter_increase(w, to);
  }
}

void LevelSolution::move_vertex(const DynGraph& g, VertexId x, int to_id) {
  auto& from = pairs_.at(owner_[x]);
  auto& to = pairs_.at(to_id);
  from.dom.erase(x);
  to.dom.insert(x);
  owner_[x] = to_id;
  ++level_changes_;
  shift_vertex_level(g, x, from.level, to.level);
}

void LevelSolution::cleanup_pair(const DynGraph& g, int pair_id) {
  auto it = pairs_.find(pair_id);
  if (it == pairs_.end()) return;
  DominatingPair& p = it->second;
  if (p.dom.empty()) {
    const VertexId head = p.dominant;
    pairs_.erase(it);
    bump_multiplicity(head, -1);
    return;
  }
  const auto size = static_cast<std::int64_t>(p.dom.size());
  if (p.level > 10 && size < pow2(p.level - 10)) {
    const int target = highest_level(size, l_max_);
    const int from = p.level;
    p.level = target;
    level_changes_ += size;
    for (VertexId x : p.dom) shift_vertex_level(g, x, from, target);
  }
}

void LevelSolution::insert_edge(const DynGraph& g, VertexId u, VertexId v) {
  ++cnt_[u][level_of_[v]];
  note_counter_increase(u, level_of_[v]);
  ++cnt_[v][level_of_[u]];
  note_counter_increase(v, level_of_[u]);
  stabilize(g);
}

void LevelSolution::handle_domination_loss(const DynGraph& g, VertexId x, VertexId gone_dominant) {
  const int old_id = owner_[x];
  if (pairs_.at(old_id).dominant != gone_dominant) return;
  // x lost its dominator; restart it as a singleton pair at level 1.
  const int id = fresh_pair_id();
  pairs_.emplace(id, DominatingPair{id, x, {}, 1});
  bump_multiplicity(x, +1);
  move_vertex(g, x, id);
  cleanup_pair(g, old_id);
}

void LevelSolution::delete_edge(const DynGraph& g, VertexId u, VertexId v) {
  --cnt_[u][level_of_[v]];
  --cnt_[v][level_of_[u]];
  handle_domination_loss(g, u, v);
  handle_domination_loss(g, v, u);
  stabilize(g);
}

void LevelSolution::stabilize(const DynGraph& g) {
  std::int64_t iterations = 0;
  while (!violations_.empty()) {
    if (++iterations > 64 * (n_ + static_cast<std::int64_t>(violations_.size())))
      throw Error(Errc::InternalInconsistency, "stabilize exceeded its iteration cap");
    auto [v, l] = violations_.front();
    violations_.pop_front();
    queued_[v][l] = 0;
    const std::int64_t c = cnt_[v][l];
    if (c <= pow2(l)) continue;  // stale entry

    // Gather N[v] cap V_l and regroup it under v at the lowest level that fits.
    std::vector<VertexId> grabbed;
    grabbed.reserve(static_cast<std::size_t>(c));
    if (level_of_[v] == l) grabbed.push_back(v);
    for (VertexId w : g.neighbors(v))
      if (level_of_[w] == l) grabbed.push_back(w);
    if (static_cast<std::int64_t>(grabbed.size()) != c)
      throw Error(Errc::InternalInconsistency,
                  "counter mismatch at (" + std::to_string(v) + "," + std::to_string(l) + ")");

    const int target = lowest_level(c);
    const int id = fresh_pair_id();
    pairs_.emplace(id, DominatingPair{id, v, {}, target});
    bump_multiplicity(v, +1);
    std::vector<int> sources;
    for (VertexId x : grabbed) {
      const int src = owner_[x];
      move_vertex(g, x, id);
      sources.push_back(src);
    }
    for (int src : sources) cleanup_pair(g, src);
  }
}

DsView LevelSolution::view() const {
  DsView out;
  out.multiplicity = multiplicity_;
  for (VertexId v = 0; v < n_; ++v)
    if (multiplicity_[v] > 0) out.members.push_back(v);
  return out;
}

}  // namespace dyndom
