#pragma once

#include <cstdint>
#include <deque>
#include <functional>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "dyndom/graph.hpp"

namespace dyndom {

/// One dominating pair: `dominant` covers every vertex in `dom` (a subset of
/// its closed neighborhood), and the members of `dom` count as dominated at
/// `level`.
struct DominatingPair {
  int id = -1;
  VertexId dominant = -1;
  std::unordered_set<VertexId> dom;
  int level = 1;
};

struct DsView {
  std::vector<VertexId> members;    // sorted
  std::vector<int> multiplicity;    // indexed by vertex, pairs headed by it
};

enum class DsChange { Entered, Left };

/// Level cap for an n-vertex universe: ceil(log2 n) + 10.
int level_cap_for(int n);
/// Smallest level whose range admits `cardinality` members: max(1, ceil(log2 c)).
int lowest_level(std::int64_t cardinality);
/// Largest admissible level, clamped to the cap: min(cap, floor(log2 c) + 10).
int highest_level(std::int64_t cardinality, int level_cap);

/// Dominating-set maintenance by leveled pairs. A pair at level l keeps
/// between 2^(l-10) and 2^l dominated vertices; whenever some vertex sees
/// more than 2^l vertices dominated at level l in its closed neighborhood,
/// stabilization regroups them one level range higher. The dominant vertices
/// of the pairs form the maintained dominating set.
class LevelSolution {
 public:
  explicit LevelSolution(int n);

  /// Both calls expect the graph to already reflect the change.
  void insert_edge(const DynGraph& g, VertexId u, VertexId v);
  void delete_edge(const DynGraph& g, VertexId u, VertexId v);

  /// Drains the violation queue until no stale or live entry remains.
  void stabilize(const DynGraph& g);

  DsView view() const;
  bool in_ds(VertexId v) const { return multiplicity_[v] > 0; }
  int ds_size() const noexcept { return ds_size_; }

  using ChangeListener = std::function<void(DsChange, VertexId)>;
  /// Called synchronously whenever a vertex enters or leaves the member set.
  void set_change_listener(ChangeListener cb) { listener_ = std::move(cb); }

  // Churn counters (zero right after construction).
  std::int64_t level_changes() const noexcept { return level_changes_; }
  std::int64_t membership_changes() const noexcept { return membership_changes_; }

  // Introspection for oracles and tests.
  int level_cap() const noexcept { return l_max_; }
  const std::unordered_map<int, DominatingPair>& pairs() const { return pairs_; }
  int owner_pair(VertexId v) const { return owner_[v]; }
  int level_of(VertexId v) const { return level_of_[v]; }
  std::int64_t counter(VertexId v, int level) const { return cnt_[v][level]; }
  int multiplicity_of(VertexId v) const { return multiplicity_[v]; }

 private:
  int fresh_pair_id() { return next_pair_id_++; }
  void bump_multiplicity(VertexId v, int delta);
  void note_counter_increase(VertexId v, int level);
  void shift_vertex_level(const DynGraph& g, VertexId x, int from, int to);
  /// Reassign x into pair `to_id` at that pair's level; counts one level
  /// change and maintains counters. Does not clean up the source pair.
  void move_vertex(const DynGraph& g, VertexId x, int to_id);
  /// Delete the pair if empty; otherwise rehome it if it underflows its range.
  void cleanup_pair(const DynGraph& g, int pair_id);
  void handle_domination_loss(const DynGraph& g, VertexId x, VertexId gone_dominant);

  int n_;
  int l_max_;
  int next_pair_id_ = 0;
  std::unordered_map<int, DominatingPair> pairs_;
  std::vector<int> owner_;             // vertex -> pair id
  std::vector<int> level_of_;          // vertex -> owner pair's level
  std::vector<std::vector<std::int64_t>> cnt_;  // [v][l] = |N[v] cap V_l|
  std::vector<int> multiplicity_;
  int ds_size_ = 0;
  std::deque<std::pair<VertexId, int>> violations_;
  std::vector<std::vector<char>> queued_;
  ChangeListener listener_;
  std::int64_t level_changes_ = 0;
  std::int64_t membership_changes_ = 0;
};

}  // namespace dyndom
