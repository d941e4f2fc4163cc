#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <set>
#include <unordered_set>
#include <utility>
#include <vector>

#include "dyndom/graph.hpp"

namespace dyndom {

enum class ConnBackend { Naive, Leveled };

/// Fully-dynamic connectivity over a fixed n-vertex universe with an explicit
/// spanning forest F. Insertions report whether the edge joined F; deletions
/// of tree edges report the replacement edge promoted into F, or a split.
/// The two backends (replacement-scan and leveled with per-edge levels) are
/// interchangeable behind this interface.
class DynamicConnectivity {
 public:
  enum class InsertResult { BecameTree, NonTree };
  struct DeleteResult {
    bool was_tree = false;
    bool split = false;
    std::optional<std::pair<VertexId, VertexId>> replacement;  // smaller id first
  };

  static std::unique_ptr<DynamicConnectivity> make(ConnBackend backend, int n);
  virtual ~DynamicConnectivity() = default;

  int num_vertices() const noexcept { return n_; }
  int num_components() const noexcept { return components_; }

  /// Errors: DuplicateEdge / SelfLoop.
  InsertResult insert_edge(VertexId u, VertexId v);
  /// Errors: MissingEdge / SelfLoop.
  DeleteResult delete_edge(VertexId u, VertexId v);
  /// May restructure internal search trees; not const by design.
  bool connected(VertexId u, VertexId v);

  bool has_edge(VertexId u, VertexId v) const;
  bool is_tree_edge(VertexId u, VertexId v) const;
  const std::unordered_set<VertexId>& tracked_neighbors(VertexId v) const { return adj_[v]; }
  const std::unordered_set<VertexId>& forest_neighbors(VertexId v) const { return f_adj_[v]; }
  /// Tracked edges currently outside the forest, in sorted order.
  const std::set<std::pair<VertexId, VertexId>>& non_tree_edges() const { return non_tree_; }

  /// Vertices of u..v along F. Errors: Disconnected.
  std::vector<VertexId> tree_path(VertexId u, VertexId v) const;
  /// Sorted vertex list of v's component.
  std::vector<VertexId> component_vertices(VertexId v) const;

 protected:
  explicit DynamicConnectivity(int n);
  virtual InsertResult do_insert(VertexId u, VertexId v) = 0;
  virtual DeleteResult do_delete(VertexId u, VertexId v) = 0;
  virtual bool do_connected(VertexId u, VertexId v) = 0;

  int n_;
  int components_;
  std::vector<std::unordered_set<VertexId>> adj_;    // all tracked edges
  std::vector<std::unordered_set<VertexId>> f_adj_;  // forest edges
  std::set<std::pair<VertexId, VertexId>> non_tree_;

 private:
  void check_pair(VertexId u, VertexId v) const;
};

}  // namespace dyndom
