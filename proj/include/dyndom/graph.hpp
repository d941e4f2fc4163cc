#pragma once

#include <cstdint>
#include <unordered_set>
#include <vector>

#include "dyndom/errors.hpp"

namespace dyndom {

using VertexId = std::int32_t;

enum class EventKind { Insert, Delete };

struct UpdateEvent {
  EventKind kind;
  VertexId u;
  VertexId v;

  bool operator==(const UpdateEvent&) const = default;
};

/// Undirected simple graph on a fixed vertex universe [0, n).
/// Hash-set adjacency; O(1) expected edge tests and removals.
class DynGraph {
 public:
  explicit DynGraph(int n);

  int num_vertices() const noexcept { return n_; }
  bool has_edge(VertexId u, VertexId v) const;
  const std::unordered_set<VertexId>& neighbors(VertexId v) const { return adj_[check(v)]; }
  int degree(VertexId v) const { return static_cast<int>(adj_[check(v)].size()); }

  std::int64_t current_edges() const noexcept { return m_current_; }
  /// High-water mark of the edge count over the whole history.
  std::int64_t max_edges() const noexcept { return m_max_; }
  /// High-water mark of any vertex degree over the whole history.
  int max_degree_seen() const noexcept { return delta_max_; }

  void insert_edge(VertexId u, VertexId v);
  void delete_edge(VertexId u, VertexId v);
  void apply(const UpdateEvent& e);

  std::vector<std::pair<VertexId, VertexId>> edges() const;

 private:
  VertexId check(VertexId v) const;

  int n_;
  std::vector<std::unordered_set<VertexId>> adj_;
  std::int64_t m_current_ = 0;
  std::int64_t m_max_ = 0;
  int delta_max_ = 0;
};

}  // namespace dyndom
