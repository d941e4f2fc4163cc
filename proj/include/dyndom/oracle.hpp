#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dyndom/graph.hpp"
#include "dyndom/mds.hpp"
#include "dyndom/minimal_ds.hpp"

namespace dyndom {

/// Brute-force reference implementations. Everything here recomputes from
/// scratch; the checkers return nullopt on success and a human-readable
/// complaint otherwise so harnesses can report the first broken invariant.
namespace oracle {

bool is_dominating(const DynGraph& g, const std::vector<VertexId>& ds);
bool is_minimal_dominating(const DynGraph& g, const std::vector<VertexId>& ds);

/// Component label per vertex (labels are the least vertex of the component).
std::vector<VertexId> component_labels(const DynGraph& g);
int count_components(const DynGraph& g);

/// Number of components the induced subgraph on `subset` minus `v` keeps
/// within v's own induced component; 0 when v is isolated in the subgraph.
int components_without_vertex(const DynGraph& g, const std::vector<VertexId>& subset, VertexId v);

/// Exhaustive optimum, smallest size with the lexicographically least vertex
/// list as tie-break. Errors: TooLarge above 20 vertices.
std::vector<VertexId> exact_min_dominating_set(const DynGraph& g);

/// As above but the set must induce a connected subgraph. Errors: TooLarge
/// above 14 vertices, Disconnected when the graph itself is not connected.
std::vector<VertexId> exact_min_connected_dominating_set(const DynGraph& g);

/// Repeatedly takes the vertex covering the most uncovered vertices (least id
/// on ties) until everything is covered.
std::vector<VertexId> greedy_dominating_set(const DynGraph& g);

/// Validates a level solution in full: the pairs partition the vertices, each
/// member lies in its dominant's closed neighborhood, pair sizes respect the
/// level ranges, no level counter exceeds its cap, and the stored counters
/// match recomputed ones.
std::optional<std::string> check_level_solution(const DynGraph& g, const LevelSolution& sol);

/// Recomputes dominator sets and private-domination lists from scratch and
/// compares them with the maintained state; also checks minimality.
std::optional<std::string> check_minimal_state(const DynGraph& g, const MinimalDominatingSet& mds);

/// Connector-set sanity: connectors are disjoint from the dominating set and
/// each one's removal disconnects its component of the induced backbone.
std::optional<std::string> connectors_all_articulation(const DynGraph& g,
                                                       const std::vector<VertexId>& ds,
                                                       const std::vector<VertexId>& connectors);

/// Within every component of the graph, all backbone vertices (dominating set
/// plus connectors) must form a single component of the induced backbone.
std::optional<std::string> backbone_connected_per_component(const DynGraph& g,
                                                            const std::vector<VertexId>& ds,
                                                            const std::vector<VertexId>& connectors);

}  // namespace oracle
}  // namespace dyndom
