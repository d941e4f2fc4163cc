#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dyndom/connectivity.hpp"
#include "dyndom/graph.hpp"
#include "dyndom/trace.hpp"

namespace dyndom {

enum class SolverKind { Mds, Minimal, CdsSlow, CdsFast };

const char* solver_name(SolverKind kind);
std::optional<SolverKind> solver_from_name(const std::string& name);
std::optional<ConnBackend> backend_from_name(const std::string& name);
const char* backend_name(ConnBackend backend);

/// Generator parameters in the CLI's "n=..,steps=..,pdel=..,seed=.." form.
/// Returns nothing on malformed or unknown keys; seed may be omitted.
struct GenSpec {
  int n = 0;
  int steps = 0;
  double p_delete = 0.0;
  std::uint64_t seed = 1;
  bool seed_given = false;
};
std::optional<GenSpec> parse_gen_spec(const std::string& text);

struct RunConfig {
  SolverKind solver = SolverKind::Mds;
  ConnBackend backend = ConnBackend::Naive;
  /// Oracle cadence: every k-th event; 0 replays without checks.
  int verify_every = 0;
  /// Metrics cadence; 0 emits just the final row.
  int checkpoint_every = 0;
  /// Fill opt/ratio on checkpoint rows when the graph is within the
  /// exact-search caps (20 vertices; 14 and connected for backbones).
  bool compute_opt = false;
  /// For backbone solvers with n <= 40: compare every stored removal count
  /// against recomputation at each verify point.
  bool check_nc = true;
};

struct CheckpointRow {
  std::int64_t event = 0;  // events applied so far
  int dsize = 0;
  int csize = 0;
  int dtsize = 0;
  std::int64_t lvl_changes = 0;
  std::int64_t d_changes = 0;
  std::int64_t dt_adds = 0;
  double ns_mean = 0.0;    // per-update wall clock since the previous row
  std::int64_t ns_p99 = 0;
  std::optional<std::int64_t> opt;
  std::optional<double> ratio;
};

struct RunResult {
  int exit_code = 0;  // 0 ok, 1 invariant violation
  std::int64_t events_applied = 0;
  std::int64_t failed_event = -1;  // 1-based index of the offending event
  std::string failure;
  std::string snapshot;  // full solver state dump at the failure point
  std::vector<CheckpointRow> rows;
  std::vector<VertexId> final_ds;
  std::vector<VertexId> final_connectors;
  std::int64_t level_changes = 0;
  std::int64_t d_changes = 0;
  std::int64_t dt_adds = 0;
  std::int64_t tie_events = 0;
  std::int64_t selections = 0;
  std::int64_t selection_bound_violations = 0;
  std::int64_t total_ns = 0;
  int max_degree_seen = 0;
  std::int64_t max_edges_seen = 0;
  std::int64_t final_edges = 0;
};

/// Replays a trace from the empty graph through the configured solver,
/// checking oracles and cutting metrics rows at the configured cadences.
/// Timing covers solver work only, never the oracles. On the first violation
/// the result carries exit_code 1, the event index, the oracle's message and
/// a state snapshot; the replay stops there.
RunResult run_replay(const UpdateTrace& trace, const RunConfig& cfg);

/// Fixed-order CSV with header
/// event,dsize,csize,dtsize,lvl_changes,d_changes,dt_adds,ns_mean,ns_p99,opt,ratio
/// where opt/ratio stay empty when unavailable.
std::string metrics_csv(const std::vector<CheckpointRow>& rows);

struct BenchRow {
  int n = 0;
  std::int64_t events = 0;
  double ns_mean = 0.0;
  int max_degree = 0;
  std::int64_t max_edges = 0;
  /// ns_mean divided by the solver's cost driver: maxdeg * log2 n for the
  /// level and backbone solvers, min(maxdeg, sqrt(m)) for the minimal one.
  double normalized = 0.0;
};

/// One unverified timing run per size, sequential so timings stay honest.
std::vector<BenchRow> run_scaling_bench(SolverKind solver, const std::vector<int>& sizes,
                                        int steps, double p_delete, std::uint64_t seed,
                                        ConnBackend backend);

}  // namespace dyndom
