#pragma once

#include <cstdint>
#include <vector>

#include "dyndom/graph.hpp"

namespace dyndom {

/// Forest of rooted trees with amortized-logarithmic path queries: per-vertex
/// 64-bit values, range add over a tree path, and path minimum with the
/// multiplicity of the minimum and its occurrence closest to the first
/// endpoint. Backed by link/cut trees (splay trees over preferred paths).
class PathForest {
 public:
  struct MinResult {
    std::int64_t value;
    VertexId argmin;  // occurrence of the minimum closest to the query's first endpoint
    int count;        // number of path vertices attaining the minimum
  };

  explicit PathForest(int n);
  ~PathForest();
  PathForest(const PathForest&) = delete;
  PathForest& operator=(const PathForest&) = delete;

  int num_vertices() const noexcept { return n_; }

  /// Errors: DuplicateEdge if u and v are already connected.
  void link(VertexId u, VertexId v);
  /// Errors: MissingEdge unless u-v is a present tree edge.
  void cut(VertexId u, VertexId v);
  bool connected(VertexId u, VertexId v);

  void set_value(VertexId v, std::int64_t value);
  std::int64_t get_value(VertexId v);

  /// The following all take the path from u to v; Errors: Disconnected.
  void path_add(VertexId u, VertexId v, std::int64_t delta);
  MinResult path_min(VertexId u, VertexId v);
  std::vector<VertexId> path_vertices(VertexId u, VertexId v);
  int path_length(VertexId u, VertexId v);

  /// The vertex of the u..v path closest to x (equal to x when x lies on the
  /// path). Errors: Disconnected unless all three share a tree.
  VertexId meet(VertexId u, VertexId v, VertexId x);
  /// Zero-based position of meet(u, v, x) along the path from u.
  int position_on_path(VertexId u, VertexId v, VertexId x);

  struct Node;  // opaque splay node

 private:
  Node* node(VertexId v) const;
  Node* access(Node* x);
  void evert(Node* x);
  Node* find_root(Node* x);
  void check(VertexId v) const;

  int n_;
  std::vector<Node*> nodes_;
};

}  // namespace dyndom
