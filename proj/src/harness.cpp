#include "dyndom/harness.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <iomanip>
#include <optional>
#include <sstream>

#include "dyndom/cds.hpp"
#include "dyndom/errors.hpp"
#include "dyndom/mds.hpp"
#include "dyndom/minimal_ds.hpp"
#include "dyndom/oracle.hpp"

namespace dyndom {

const char* solver_name(SolverKind kind) {
  switch (kind) {
    case SolverKind::Mds: return "mds";
    case SolverKind::Minimal: return "minimal";
    case SolverKind::CdsSlow: return "cds-slow";
    case SolverKind::CdsFast: return "cds-fast";
  }
  return "?";
}

std::optional<SolverKind> solver_from_name(const std::string& name) {
  if (name == "mds") return SolverKind::Mds;
  if (name == "minimal") return SolverKind::Minimal;
  if (name == "cds-slow") return SolverKind::CdsSlow;
  if (name == "cds-fast") return SolverKind::CdsFast;
  return std::nullopt;
}

std::optional<ConnBackend> backend_from_name(const std::string& name) {
  if (name == "naive") return ConnBackend::Naive;
  if (name == "leveled") return ConnBackend::Leveled;
  return std::nullopt;
}

const char* backend_name(ConnBackend backend) {
  return backend == ConnBackend::Naive ? "naive" : "leveled";
}

std::optional<GenSpec> parse_gen_spec(const std::string& text) {
  GenSpec spec;
  bool have_n = false;
  bool have_steps = false;
  std::vector<std::string> items;
  std::string cur;
  for (char c : text) {
    if (c == ',') {
      items.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  items.push_back(cur);
  for (const std::string& item : items) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) return std::nullopt;
    const std::string key = item.substr(0, eq);
    const std::string val = item.substr(eq + 1);
    if (val.empty()) return std::nullopt;
    const auto parse_number = [&val](auto& out) {
      const char* end = val.data() + val.size();
      const auto [p, ec] = std::from_chars(val.data(), end, out);
      return ec == std::errc() && p == end;
    };
    if (key == "n") {
      if (!parse_number(spec.n) || spec.n <= 0) return std::nullopt;
      have_n = true;
    } else if (key == "steps") {
      if (!parse_number(spec.steps) || spec.steps < 0) return std::nullopt;
      have_steps = true;
    } else if (key == "pdel") {
      try {
        std::size_t used = 0;
        spec.p_delete = std::stod(val, &used);
        if (used != val.size()) return std::nullopt;
      } catch (...) {
        return std::nullopt;
      }
      if (!(spec.p_delete >= 0.0 && spec.p_delete <= 1.0)) return std::nullopt;
    } else if (key == "seed") {
      if (!parse_number(spec.seed)) return std::nullopt;
      spec.seed_given = true;
    } else {
      return std::nullopt;
    }
  }
  if (!have_n || !have_steps) return std::nullopt;
  return spec;
}

namespace {

std::string fmt_double(double v, int prec) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(prec) << v;
  return os.str();
}

void dump_levels(std::ostringstream& os, const LevelSolution& sol) {
  os << "levels: ds_size=" << sol.ds_size() << " level_cap=" << sol.level_cap()
     << " level_changes=" << sol.level_changes()
     << " membership_changes=" << sol.membership_changes() << "\n";
  std::vector<int> ids;
  ids.reserve(sol.pairs().size());
  for (const auto& [id, p] : sol.pairs()) ids.push_back(id);
  std::sort(ids.begin(), ids.end());
  for (int id : ids) {
    const auto& p = sol.pairs().at(id);
    std::vector<VertexId> dom(p.dom.begin(), p.dom.end());
    std::sort(dom.begin(), dom.end());
    os << "  pair " << id << ": dominant=" << p.dominant << " level=" << p.level << " dom=";
    for (VertexId v : dom) os << ' ' << v;
    os << "\n";
  }
}

struct SolverBox {
  SolverKind kind;
  int n;
  std::optional<LevelSolution> mds;
  std::optional<MinimalDominatingSet> minimal;
  std::optional<CdsSolver> cds;

  SolverBox(SolverKind k, int n_in, ConnBackend backend) : kind(k), n(n_in) {
    switch (kind) {
      case SolverKind::Mds:
        mds.emplace(n);
        break;
      case SolverKind::Minimal:
        minimal.emplace(n);
        break;
      case SolverKind::CdsSlow:
        cds.emplace(n, CdsMode::Slow, backend);
        break;
      case SolverKind::CdsFast:
        cds.emplace(n, CdsMode::Fast, backend);
        break;
    }
  }

  void apply(const DynGraph& g, const UpdateEvent& e) {
    if (mds) {
      if (e.kind == EventKind::Insert)
        mds->insert_edge(g, e.u, e.v);
      else
        mds->delete_edge(g, e.u, e.v);
    } else if (minimal) {
      if (e.kind == EventKind::Insert)
        minimal->insert_edge(g, e.u, e.v);
      else
        minimal->delete_edge(g, e.u, e.v);
    } else {
      cds->apply(g, e);
    }
  }

  int dsize() const {
    if (mds) return mds->ds_size();
    if (minimal) return minimal->ds_size();
    return cds->overlay().ds_size();
  }
  int csize() const { return cds ? cds->overlay().connector_count() : 0; }
  int dtsize() const { return cds ? cds->overlay().backbone_size() : dsize(); }
  std::int64_t level_changes() const {
    if (mds) return mds->level_changes();
    if (cds) return cds->levels().level_changes();
    return 0;
  }
  std::int64_t d_changes() const {
    if (mds) return mds->membership_changes();
    if (minimal) return minimal->membership_changes();
    return cds->levels().membership_changes();
  }
  std::int64_t dt_adds() const { return cds ? cds->overlay().backbone_additions() : 0; }
  std::int64_t tie_events() const { return cds ? cds->overlay().tie_events() : 0; }
  std::int64_t selections() const { return minimal ? minimal->selections() : 0; }
  std::int64_t selection_violations() const {
    return minimal ? minimal->selection_bound_violations() : 0;
  }

  std::vector<VertexId> ds_members() const {
    if (mds) return mds->view().members;
    if (minimal) return minimal->ds_members();
    return cds->ds_members();
  }
  std::vector<VertexId> connectors() const { return cds ? cds->connector_set() : std::vector<VertexId>{}; }

  std::optional<std::string> verify(const DynGraph& g, const RunConfig& cfg) {
    if (mds) return oracle::check_level_solution(g, *mds);
    if (minimal) return oracle::check_minimal_state(g, *minimal);
    if (auto err = oracle::check_level_solution(g, cds->levels())) return err;
    ConnectorOverlay& ov = cds->overlay();
    for (VertexId v = 0; v < n; ++v) {
      if (ov.in_ds(v) != cds->levels().in_ds(v))
        return "membership mismatch between level solution and overlay at vertex " +
               std::to_string(v);
    }
    const std::vector<VertexId> ds = cds->ds_members();
    const std::vector<VertexId> cs = cds->connector_set();
    if (auto err = oracle::backbone_connected_per_component(g, ds, cs)) return err;
    if (auto err = oracle::connectors_all_articulation(g, ds, cs)) return err;
    if (cs.size() > 2 * ds.size())
      return "connector set larger than twice the dominating set: |C|=" +
             std::to_string(cs.size()) + " |D|=" + std::to_string(ds.size());
    if (cfg.check_nc && n <= 40) {
      const std::vector<VertexId> bb = ov.backbone();
      for (VertexId v : bb) {
        const int brute = oracle::components_without_vertex(g, bb, v);
        const std::int64_t want = brute + (ov.in_ds(v) ? n : 0);
        const std::int64_t got = ov.stored_removal_count(v);
        if (got != want)
          return "stored removal count off at vertex " + std::to_string(v) + ": stored " +
                 std::to_string(got) + ", recomputed " + std::to_string(want);
      }
    }
    return std::nullopt;
  }

  std::string snapshot(const DynGraph& g, const UpdateEvent& e, std::int64_t index) {
    std::ostringstream os;
    os << "dyndom state snapshot\n";
    os << "solver: " << solver_name(kind) << "\n";
    os << "n: " << n << "\n";
    os << "event: " << index << " " << (e.kind == EventKind::Insert ? '+' : '-') << ' ' << e.u
       << ' ' << e.v << "\n";
    auto edges = g.edges();
    std::sort(edges.begin(), edges.end());
    os << "graph: m=" << edges.size() << "\n";
    for (const auto& [a, b] : edges) os << "  " << a << ' ' << b << "\n";
    if (mds) dump_levels(os, *mds);
    if (cds) dump_levels(os, cds->levels());
    if (minimal) {
      const auto members = minimal->ds_members();
      os << "minimal ds:";
      for (VertexId v : members) os << ' ' << v;
      os << "\n";
      os << "membership_changes=" << minimal->membership_changes()
         << " selections=" << minimal->selections() << "\n";
      for (VertexId u = 0; u < n; ++u) {
        std::vector<VertexId> nd(minimal->dominators_of(u).begin(),
                                 minimal->dominators_of(u).end());
        std::sort(nd.begin(), nd.end());
        os << "  nd[" << u << "]=";
        for (VertexId v : nd) os << ' ' << v;
        os << "\n";
      }
      for (VertexId v : members) {
        std::vector<VertexId> only(minimal->privately_dominated(v).begin(),
                                   minimal->privately_dominated(v).end());
        std::sort(only.begin(), only.end());
        os << "  only[" << v << "]=";
        for (VertexId u : only) os << ' ' << u;
        os << "\n";
      }
    }
    if (cds) {
      ConnectorOverlay& ov = cds->overlay();
      os << "connectors:";
      for (VertexId v : ov.connector_set()) os << ' ' << v;
      os << "\n";
      os << "backbone_additions=" << ov.backbone_additions() << " tie_events=" << ov.tie_events()
         << "\n";
      os << "stored counts:\n";
      for (VertexId v : ov.backbone())
        os << "  " << v << ": " << ov.stored_removal_count(v) << "\n";
    }
    return os.str();
  }
};

}  // namespace

RunResult run_replay(const UpdateTrace& trace, const RunConfig& cfg) {
  RunResult out;
  DynGraph g(trace.n);
  SolverBox box(cfg.solver, trace.n, cfg.backend);
  std::vector<std::int64_t> window;

  const auto fill_counters = [&]() {
    out.final_ds = box.ds_members();
    out.final_connectors = box.connectors();
    out.level_changes = box.level_changes();
    out.d_changes = box.d_changes();
    out.dt_adds = box.dt_adds();
    out.tie_events = box.tie_events();
    out.selections = box.selections();
    out.selection_bound_violations = box.selection_violations();
    out.max_degree_seen = g.max_degree_seen();
    out.max_edges_seen = g.max_edges();
    out.final_edges = g.current_edges();
  };

  const auto attach_opt = [&](CheckpointRow& row) {
    if (!cfg.compute_opt) return;
    try {
      const auto witness = box.cds ? oracle::exact_min_connected_dominating_set(g)
                                   : oracle::exact_min_dominating_set(g);
      if (witness.empty()) return;
      row.opt = static_cast<std::int64_t>(witness.size());
      const int achieved = box.cds ? row.dtsize : row.dsize;
      row.ratio = static_cast<double>(achieved) / static_cast<double>(witness.size());
    } catch (const Error&) {
      // beyond the exact-search caps, or no optimum defined: leave the cells empty
    }
  };

  const auto cut_row = [&]() {
    CheckpointRow row;
    row.event = out.events_applied;
    row.dsize = box.dsize();
    row.csize = box.csize();
    row.dtsize = box.dtsize();
    row.lvl_changes = box.level_changes();
    row.d_changes = box.d_changes();
    row.dt_adds = box.dt_adds();
    if (!window.empty()) {
      std::int64_t sum = 0;
      for (std::int64_t x : window) sum += x;
      row.ns_mean = static_cast<double>(sum) / static_cast<double>(window.size());
      std::vector<std::int64_t> sorted(window);
      std::sort(sorted.begin(), sorted.end());
      std::size_t rank = (sorted.size() * 99 + 99) / 100;  // nearest-rank p99
      if (rank < 1) rank = 1;
      row.ns_p99 = sorted[rank - 1];
    }
    window.clear();
    attach_opt(row);
    out.rows.push_back(row);
  };

  const auto fail = [&](const UpdateEvent& e, const std::string& message) {
    out.exit_code = 1;
    out.failed_event = out.events_applied;
    out.failure = message;
    out.snapshot = box.snapshot(g, e, out.events_applied);
    cut_row();
    fill_counters();
  };

  for (const UpdateEvent& e : trace.events) {
    const auto t0 = std::chrono::steady_clock::now();
    std::optional<std::string> apply_error;
    try {
      g.apply(e);
      box.apply(g, e);
    } catch (const Error& err) {
      apply_error = err.what();
    }
    const auto t1 = std::chrono::steady_clock::now();
    ++out.events_applied;
    const auto ns = std::chrono::duration_cast<std::chrono::nanoseconds>(t1 - t0).count();
    window.push_back(ns);
    out.total_ns += ns;
    if (apply_error) {
      fail(e, "event application failed: " + *apply_error);
      return out;
    }
    if (cfg.verify_every > 0 && out.events_applied % cfg.verify_every == 0) {
      if (auto err = box.verify(g, cfg)) {
        fail(e, *err);
        return out;
      }
    }
    if (cfg.checkpoint_every > 0 && out.events_applied % cfg.checkpoint_every == 0) cut_row();
  }
  if (out.rows.empty() || out.rows.back().event != out.events_applied) cut_row();
  fill_counters();
  return out;
}

std::string metrics_csv(const std::vector<CheckpointRow>& rows) {
  std::ostringstream os;
  os << "event,dsize,csize,dtsize,lvl_changes,d_changes,dt_adds,ns_mean,ns_p99,opt,ratio\n";
  for (const CheckpointRow& r : rows) {
    os << r.event << ',' << r.dsize << ',' << r.csize << ',' << r.dtsize << ',' << r.lvl_changes
       << ',' << r.d_changes << ',' << r.dt_adds << ',' << fmt_double(r.ns_mean, 1) << ','
       << r.ns_p99 << ',';
    if (r.opt) os << *r.opt;
    os << ',';
    if (r.ratio) os << fmt_double(*r.ratio, 3);
    os << '\n';
  }
  return os.str();
}

std::vector<BenchRow> run_scaling_bench(SolverKind solver, const std::vector<int>& sizes,
                                        int steps, double p_delete, std::uint64_t seed,
                                        ConnBackend backend) {
  std::vector<BenchRow> rows;
  rows.reserve(sizes.size());
  for (int n : sizes) {
    const UpdateTrace t =
        generate_trace(n, steps, p_delete, seed + static_cast<std::uint64_t>(n));
    RunConfig cfg;
    cfg.solver = solver;
    cfg.backend = backend;
    const RunResult r = run_replay(t, cfg);
    BenchRow row;
    row.n = n;
    row.events = r.events_applied;
    row.ns_mean =
        r.events_applied > 0 ? static_cast<double>(r.total_ns) / static_cast<double>(r.events_applied) : 0.0;
    row.max_degree = r.max_degree_seen;
    row.max_edges = r.max_edges_seen;
    double driver = 1.0;
    if (solver == SolverKind::Minimal) {
      driver = std::min(static_cast<double>(std::max(1, r.max_degree_seen)),
                        std::sqrt(static_cast<double>(std::max<std::int64_t>(1, r.max_edges_seen))));
    } else {
      driver = static_cast<double>(std::max(1, r.max_degree_seen)) *
               std::max(1.0, std::log2(static_cast<double>(n)));
    }
    row.normalized = row.ns_mean / driver;
    rows.push_back(row);
  }
  return rows;
}

}  // namespace dyndom
