#include <string>
#include <vector>

#include "doctest.h"
#include "dyndom/harness.hpp"
#include "dyndom/trace.hpp"

using namespace dyndom;

TEST_CASE("solver and backend names round trip") {
  for (const auto kind :
       {SolverKind::Mds, SolverKind::Minimal, SolverKind::CdsSlow, SolverKind::CdsFast}) {
    const auto back = solver_from_name(solver_name(kind));
    REQUIRE(back.has_value());
    CHECK(*back == kind);
  }
  CHECK(solver_from_name("mds") == SolverKind::Mds);
  CHECK(solver_from_name("cds-fast") == SolverKind::CdsFast);
  CHECK_FALSE(solver_from_name("cds").has_value());
  CHECK_FALSE(solver_from_name("MDS").has_value());
  CHECK(backend_from_name("naive") == ConnBackend::Naive);
  CHECK(backend_from_name("leveled") == ConnBackend::Leveled);
  CHECK_FALSE(backend_from_name("hdt").has_value());
  CHECK(std::string(backend_name(ConnBackend::Leveled)) == "leveled");
}

TEST_CASE("generator spec parsing") {
  const auto full = parse_gen_spec("n=16,steps=2000,pdel=0.3,seed=42");
  REQUIRE(full.has_value());
  CHECK(full->n == 16);
  CHECK(full->steps == 2000);
  CHECK(full->p_delete == doctest::Approx(0.3));
  CHECK(full->seed == 42);
  CHECK(full->seed_given);

  const auto minimal = parse_gen_spec("n=8,steps=100");
  REQUIRE(minimal.has_value());
  CHECK(minimal->p_delete == 0.0);
  CHECK_FALSE(minimal->seed_given);

  CHECK_FALSE(parse_gen_spec("").has_value());
  CHECK_FALSE(parse_gen_spec("n=8").has_value());            // steps required
  CHECK_FALSE(parse_gen_spec("steps=10").has_value());       // n required
  CHECK_FALSE(parse_gen_spec("n=0,steps=10").has_value());   // empty universe
  CHECK_FALSE(parse_gen_spec("n=8,steps=-1").has_value());
  CHECK_FALSE(parse_gen_spec("n=8,steps=10,pdel=1.5").has_value());
  CHECK_FALSE(parse_gen_spec("n=8,steps=10,p=0.5").has_value());  // unknown key
  CHECK_FALSE(parse_gen_spec("n=8,,steps=10").has_value());
  CHECK_FALSE(parse_gen_spec("n=8,steps=10,seed=").has_value());
}

TEST_CASE("metrics header and empty optimum cells") {
  CheckpointRow with;
  with.event = 10;
  with.dsize = 3;
  with.csize = 1;
  with.dtsize = 4;
  with.lvl_changes = 20;
  with.d_changes = 5;
  with.dt_adds = 6;
  with.ns_mean = 1234.5;
  with.ns_p99 = 9000;
  with.opt = 2;
  with.ratio = 2.0;
  CheckpointRow without;
  without.event = 20;
  without.ns_mean = 1.0;

  const std::string csv = metrics_csv({with, without});
  const std::string header = csv.substr(0, csv.find('\n'));
  CHECK(header == "event,dsize,csize,dtsize,lvl_changes,d_changes,dt_adds,ns_mean,ns_p99,opt,ratio");
  CHECK(csv.find(",2,2.000\n") != std::string::npos);
  CHECK(csv.back() == '\n');
  // the cap-exceeded row ends with two empty cells
  const auto last_line_start = csv.rfind('\n', csv.size() - 2);
  const std::string last = csv.substr(last_line_start + 1);
  CHECK(last.substr(last.size() - 3) == ",,\n");
}

TEST_CASE("replays are deterministic") {
  const UpdateTrace t = generate_trace(14, 600, 0.4, 77);
  for (const auto solver :
       {SolverKind::Mds, SolverKind::Minimal, SolverKind::CdsSlow, SolverKind::CdsFast}) {
    CAPTURE(solver_name(solver));
    RunConfig cfg;
    cfg.solver = solver;
    cfg.verify_every = 1;
    cfg.checkpoint_every = 50;
    const RunResult a = run_replay(t, cfg);
    const RunResult b = run_replay(t, cfg);
    CHECK(a.exit_code == 0);
    CHECK(b.exit_code == 0);
    CHECK(static_cast<std::size_t>(a.events_applied) == t.events.size());
    CHECK(a.final_ds == b.final_ds);
    CHECK(a.final_connectors == b.final_connectors);
    CHECK(a.level_changes == b.level_changes);
    CHECK(a.d_changes == b.d_changes);
    CHECK(a.dt_adds == b.dt_adds);
    CHECK(a.tie_events == b.tie_events);
    CHECK(a.rows.size() == b.rows.size());
    for (std::size_t i = 0; i < a.rows.size(); ++i) {
      CHECK(a.rows[i].dsize == b.rows[i].dsize);
      CHECK(a.rows[i].dtsize == b.rows[i].dtsize);
    }
  }
}

TEST_CASE("backend choice never changes the answers") {
  const UpdateTrace t = generate_trace(16, 800, 0.5, 5);
  for (const auto solver : {SolverKind::Mds, SolverKind::CdsFast}) {
    RunConfig cfg;
    cfg.solver = solver;
    cfg.verify_every = 4;
    RunConfig leveled = cfg;
    leveled.backend = ConnBackend::Leveled;
    const RunResult a = run_replay(t, cfg);
    const RunResult b = run_replay(t, leveled);
    CHECK(a.exit_code == 0);
    CHECK(b.exit_code == 0);
    CHECK(a.final_ds == b.final_ds);
    CHECK(a.final_connectors == b.final_connectors);
  }
}

TEST_CASE("an inconsistent trace stops the replay with a snapshot") {
  UpdateTrace t;
  t.n = 6;
  t.events.push_back({EventKind::Insert, 0, 1});
  t.events.push_back({EventKind::Delete, 2, 3});  // was never inserted
  t.events.push_back({EventKind::Insert, 1, 2});
  RunConfig cfg;
  cfg.solver = SolverKind::CdsFast;
  cfg.verify_every = 1;
  const RunResult r = run_replay(t, cfg);
  CHECK(r.exit_code == 1);
  CHECK(r.failed_event == 2);
  CHECK(r.events_applied == 2);  // stops at the offending event
  CHECK_FALSE(r.failure.empty());
  CHECK(r.snapshot.find("solver: cds-fast") != std::string::npos);
  CHECK(r.snapshot.find("n: 6") != std::string::npos);
  CHECK(r.snapshot.find("event: 2") != std::string::npos);
}

TEST_CASE("checkpoint rows carry the exact optimum on small graphs") {
  // a fixed 6-cycle: optimum dominating set size is 2
  UpdateTrace t;
  t.n = 6;
  for (int i = 0; i < 6; ++i)
    t.events.push_back({EventKind::Insert, static_cast<VertexId>(i),
                        static_cast<VertexId>((i + 1) % 6)});
  RunConfig cfg;
  cfg.solver = SolverKind::Mds;
  cfg.verify_every = 1;
  cfg.checkpoint_every = 6;
  cfg.compute_opt = true;
  const RunResult r = run_replay(t, cfg);
  REQUIRE(r.exit_code == 0);
  REQUIRE_FALSE(r.rows.empty());
  const CheckpointRow& last = r.rows.back();
  REQUIRE(last.opt.has_value());
  CHECK(*last.opt == 2);
  REQUIRE(last.ratio.has_value());
  CHECK(*last.ratio >= 1.0);
}

TEST_CASE("scaling bench produces one row per size") {
  const auto rows = run_scaling_bench(SolverKind::Mds, {16, 32}, 300, 0.3, 3,
                                      ConnBackend::Naive);
  REQUIRE(rows.size() == 2);
  CHECK(rows[0].n == 16);
  CHECK(rows[1].n == 32);
  for (const auto& row : rows) {
    CHECK(row.events == 300);
    CHECK(row.ns_mean > 0.0);
    CHECK(row.max_degree >= 1);
    CHECK(row.normalized > 0.0);
  }
}
