#pragma once

#include <cstdint>
#include <deque>
#include <memory>
#include <vector>

#include "dyndom/connectivity.hpp"
#include "dyndom/graph.hpp"
#include "dyndom/link_cut.hpp"
#include "dyndom/mds.hpp"

namespace dyndom {

enum class CdsMode { Slow, Fast };

/// Connector bookkeeping on top of a dominating set D: maintains a set C of
/// extra vertices so that inside every component of the graph, D union C (the
/// backbone) induces a single connected piece, and no connector can be dropped
/// without splitting it. For every backbone vertex v the path forest stores
/// nc(v), the number of pieces v's own backbone component falls into when v is
/// removed (0 for an isolated vertex), offset by +n for members of D so that
/// path-minimum queries only ever surface removable connectors. Fast mode
/// evicts a connector as soon as its stored count drops to 1; slow mode
/// re-derives removability by search in a final pass over C.
class ConnectorOverlay {
 public:
  ConnectorOverlay(int n, CdsMode mode, ConnBackend backend,
                   const std::vector<VertexId>& initial_ds);

  /// Mirror of the underlying graph, used to spot graph components whose
  /// backbone fell apart. Call before any other per-event phase.
  void sync_graph_inserted(VertexId u, VertexId v);
  void sync_graph_deleted(VertexId u, VertexId v);

  /// Phase two: dominating-set membership changes, in the order they fired.
  void on_ds_changed(const DynGraph& g, DsChange change, VertexId v);
  /// Phase three: the edge event itself, applied to the backbone if tracked.
  void on_edge_inserted(const DynGraph& g, VertexId u, VertexId v);
  void on_edge_deleted(const DynGraph& g, VertexId u, VertexId v);
  /// Phase four: reconnect split backbones, then drop whatever connectors are
  /// no longer needed.
  void finish_update(const DynGraph& g);

  bool in_ds(VertexId v) const { return in_ds_[v]; }
  bool in_connector_set(VertexId v) const { return in_c_[v]; }
  bool in_backbone(VertexId v) const { return in_ds_[v] || in_c_[v]; }
  int ds_size() const noexcept { return ds_size_; }
  int connector_count() const noexcept { return c_size_; }
  int backbone_size() const noexcept { return ds_size_ + c_size_; }
  std::vector<VertexId> connector_set() const;
  std::vector<VertexId> backbone() const;

  /// Raw stored removal-component count (offset by n for members of D).
  std::int64_t stored_removal_count(VertexId v);

  /// Interior vertices of the backbone tree path whose removal separates the
  /// endpoints in the current backbone, in path order. Exposed for tests.
  std::vector<VertexId> uncovered_segments(VertexId from, VertexId to);

  std::int64_t backbone_additions() const noexcept { return backbone_additions_; }
  std::int64_t tie_events() const noexcept { return tie_events_; }

 private:
  static constexpr std::int64_t kInstalling = std::int64_t{1} << 40;

  void add_overlay_edge(VertexId u, VertexId v);
  void remove_overlay_edge(VertexId u, VertexId v);
  void bump(VertexId v, std::int64_t delta);
  bool bypass_exists(VertexId from, VertexId to, VertexId without);
  int components_without_slow(VertexId v);
  void install_vertex(const DynGraph& g, VertexId v, bool as_ds_member);
  void remove_from_backbone(VertexId v);
  void drain_evictions();
  /// Merges two backbone components via one or two fresh connectors found
  /// next to the smaller side. Errors: NoShortConnector.
  void reconnect_components(const DynGraph& g, VertexId rep_a, VertexId rep_b);
  void restore_minimality_slow();

  int n_;
  CdsMode mode_;
  std::unique_ptr<DynamicConnectivity> conn_;    // backbone-induced subgraph
  std::unique_ptr<DynamicConnectivity> conn_g_;  // whole graph
  PathForest paths_;  // mirrors conn_'s forest; node values carry nc
  std::vector<char> in_ds_;
  std::vector<char> in_c_;
  int ds_size_ = 0;
  int c_size_ = 0;
  std::deque<VertexId> evict_queue_;
  std::int64_t backbone_additions_ = 0;
  std::int64_t tie_events_ = 0;
};

/// Level-based dominating set combined with the connector overlay; one call
/// per edge event keeps both in sync.
class CdsSolver {
 public:
  CdsSolver(int n, CdsMode mode, ConnBackend backend);

  /// The graph must already reflect the event.
  void apply(const DynGraph& g, const UpdateEvent& event);

  const LevelSolution& levels() const { return mds_; }
  const ConnectorOverlay& overlay() const { return overlay_; }
  ConnectorOverlay& overlay() { return overlay_; }

  std::vector<VertexId> ds_members() const { return mds_.view().members; }
  std::vector<VertexId> connector_set() const { return overlay_.connector_set(); }
  std::vector<VertexId> backbone() const { return overlay_.backbone(); }

 private:
  LevelSolution mds_;
  ConnectorOverlay overlay_;
  std::vector<std::pair<DsChange, VertexId>> pending_;
};

/// Weight of a spanning forest that prefers backbone-internal edges (weight 1)
/// and pays `heavy` per edge hanging a non-backbone vertex off the backbone:
/// (|B| - c) + heavy * ((n - c_g) - (|B| - c)) with c the number of induced
/// backbone components and c_g the number of graph components.
std::int64_t mst_weight(const DynGraph& g, const std::vector<VertexId>& backbone,
                        std::int64_t heavy);

}  // namespace dyndom
