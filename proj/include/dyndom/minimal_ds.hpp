#pragma once

#include <cstdint>
#include <unordered_set>
#include <vector>

#include "dyndom/graph.hpp"

namespace dyndom {

/// Maintains an (inclusion-)minimal dominating set D. For every vertex u the
/// set dominators_of(u) = D cap N[u] is kept, and for every member v the set
/// privately_dominated(v) = {u in N[v] : dominators_of(u) == {v}}. A member
/// whose privately-dominated set empties during an insertion-side update is
/// redundant and gets removed.
class MinimalDominatingSet {
 public:
  explicit MinimalDominatingSet(int n);

  /// Both calls expect the graph to already reflect the change.
  void insert_edge(const DynGraph& g, VertexId u, VertexId v);
  void delete_edge(const DynGraph& g, VertexId u, VertexId v);

  /// Errors: AlreadyMember. Cascading removals of members made redundant by
  /// v's arrival run FIFO, re-validating before each removal.
  void add_to_ds(const DynGraph& g, VertexId v);
  /// Errors: StillNeeded unless privately_dominated(v) is empty.
  void remove_from_ds(const DynGraph& g, VertexId v);

  /// Picks a dominator for an undominated vertex u: u itself when
  /// deg(u) <= 2*sqrt(m)+1, otherwise the first vertex of degree <= sqrt(m)
  /// among the first 2*floor(sqrt(m))+1 neighbors scanned. The averaging
  /// bound guarantees one exists; a failed scan is InternalInconsistency.
  VertexId choose_dominator(const DynGraph& g, VertexId u);

  bool in_ds(VertexId v) const { return in_d_[v] != 0; }
  int ds_size() const noexcept { return d_size_; }
  std::vector<VertexId> ds_members() const;
  const std::unordered_set<VertexId>& dominators_of(VertexId u) const { return nd_[u]; }
  const std::unordered_set<VertexId>& privately_dominated(VertexId v) const { return only_[v]; }

  // Metrics.
  std::int64_t elementary_ops() const noexcept { return ops_; }
  std::int64_t membership_changes() const noexcept { return membership_changes_; }
  std::int64_t budget_of(VertexId v) const { return budget_[v]; }
  std::int64_t selections() const noexcept { return selections_; }
  /// Chosen dominators whose degree exceeded 2*sqrt(m)+1 at selection time
  /// (always 0 unless there is a bug).
  std::int64_t selection_bound_violations() const noexcept { return selection_violations_; }

 private:
  void insert_dominator(VertexId u, VertexId d, std::vector<VertexId>& redundant);
  void erase_dominator(VertexId u, VertexId d);
  void drain_redundant(const DynGraph& g, std::vector<VertexId>& redundant);

  int n_;
  std::vector<char> in_d_;
  std::vector<std::unordered_set<VertexId>> nd_;    // u -> D cap N[u]
  std::vector<std::unordered_set<VertexId>> only_;  // v in D -> privately dominated
  std::vector<std::int64_t> budget_;
  int d_size_ = 0;
  std::int64_t ops_ = 0;
  std::int64_t membership_changes_ = 0;
  std::int64_t selections_ = 0;
  std::int64_t selection_violations_ = 0;
};

}  // namespace dyndom
