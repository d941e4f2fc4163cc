#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "dyndom/errors.hpp"
#include "dyndom/harness.hpp"
#include "dyndom/trace.hpp"

namespace {

struct CliOptions {
  std::string solver = "mds";
  std::string trace_path;
  std::string gen_spec;
  int verify_every = -1;  // -1 = subcommand default
  std::string backend = "naive";
  std::string metrics_path;
  std::uint64_t seed = 1;
};

void add_common_flags(CLI::App* cmd, CliOptions& opt, bool with_trace_source) {
  cmd->add_option("--solver", opt.solver, "solver: mds, minimal, cds-slow, cds-fast")
      ->check(CLI::IsMember({"mds", "minimal", "cds-slow", "cds-fast"}));
  cmd->add_option("--backend", opt.backend, "connectivity backend: naive or leveled")
      ->check(CLI::IsMember({"naive", "leveled"}));
  cmd->add_option("--seed", opt.seed, "seed used when the generator spec does not carry one");
  if (with_trace_source) {
    auto* trace = cmd->add_option("--trace", opt.trace_path, "trace file to replay");
    auto* gen = cmd->add_option("--gen", opt.gen_spec,
                                "generate the trace: n=..,steps=..,pdel=..,seed=..");
    trace->excludes(gen);
    gen->excludes(trace);
    cmd->add_option("--verify-every", opt.verify_every,
                    "check oracles every K events (0 = off)");
    cmd->add_option("--metrics", opt.metrics_path, "write checkpoint metrics CSV here");
  }
}

bool load_trace(const CliOptions& opt, dyndom::UpdateTrace& out, std::string& err) {
  if (!opt.trace_path.empty()) {
    try {
      out = dyndom::parse_trace_file(opt.trace_path);
    } catch (const dyndom::Error& e) {
      err = e.what();
      return false;
    }
    return true;
  }
  if (!opt.gen_spec.empty()) {
    const auto spec = dyndom::parse_gen_spec(opt.gen_spec);
    if (!spec) {
      err = "malformed --gen spec '" + opt.gen_spec + "'";
      return false;
    }
    out = dyndom::generate_trace(spec->n, spec->steps, spec->p_delete,
                                 spec->seed_given ? spec->seed : opt.seed);
    return true;
  }
  err = "need --trace FILE or --gen n=..,steps=..,pdel=..,seed=..";
  return false;
}

bool write_file(const std::string& path, const std::string& content, std::string& err) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    err = "cannot open '" + path + "' for writing";
    return false;
  }
  out << content;
  if (!out) {
    err = "write to '" + path + "' failed";
    return false;
  }
  return true;
}

int run_command(const CliOptions& opt, bool verify_by_default) {
  dyndom::UpdateTrace trace;
  std::string err;
  if (!load_trace(opt, trace, err)) {
    std::cerr << "dyndom: " << err << "\n";
    return 2;
  }
  dyndom::RunConfig cfg;
  cfg.solver = *dyndom::solver_from_name(opt.solver);
  cfg.backend = *dyndom::backend_from_name(opt.backend);
  cfg.verify_every = opt.verify_every >= 0 ? opt.verify_every : (verify_by_default ? 1 : 0);
  if (!opt.metrics_path.empty()) {
    cfg.checkpoint_every =
        std::max<int>(1, static_cast<int>(trace.events.size() / 100));
    cfg.compute_opt = true;
  }
  const dyndom::RunResult result = dyndom::run_replay(trace, cfg);
  if (!opt.metrics_path.empty()) {
    if (!write_file(opt.metrics_path, dyndom::metrics_csv(result.rows), err)) {
      std::cerr << "dyndom: " << err << "\n";
      return 2;
    }
  }
  std::cout << "solver=" << opt.solver << " backend=" << opt.backend << " n=" << trace.n
            << " events=" << result.events_applied << "\n";
  std::cout << "dsize=" << result.final_ds.size() << " csize=" << result.final_connectors.size()
            << " lvl_changes=" << result.level_changes << " d_changes=" << result.d_changes
            << " dt_adds=" << result.dt_adds << " tie_events=" << result.tie_events << "\n";
  if (result.events_applied > 0) {
    std::cout << "ns_per_update_mean=" << std::fixed << std::setprecision(1)
              << static_cast<double>(result.total_ns) /
                     static_cast<double>(result.events_applied)
              << "\n";
  }
  if (result.exit_code != 0) {
    const std::string snap_path =
        opt.metrics_path.empty() ? "dyndom.snapshot.txt" : opt.metrics_path + ".snapshot.txt";
    std::string werr;
    if (write_file(snap_path, result.snapshot, werr)) {
      std::cerr << "dyndom: violation at event " << result.failed_event << ": " << result.failure
                << "\n";
      std::cerr << "dyndom: state snapshot written to " << snap_path << "\n";
    } else {
      std::cerr << "dyndom: violation at event " << result.failed_event << ": " << result.failure
                << " (snapshot not written: " << werr << ")\n";
    }
    return 1;
  }
  return 0;
}

int gen_command(const CliOptions& opt) {
  if (opt.gen_spec.empty()) {
    std::cerr << "dyndom: gen needs --gen n=..,steps=..,pdel=..,seed=..\n";
    return 2;
  }
  const auto spec = dyndom::parse_gen_spec(opt.gen_spec);
  if (!spec) {
    std::cerr << "dyndom: malformed --gen spec '" << opt.gen_spec << "'\n";
    return 2;
  }
  const dyndom::UpdateTrace trace = dyndom::generate_trace(
      spec->n, spec->steps, spec->p_delete, spec->seed_given ? spec->seed : opt.seed);
  if (opt.trace_path.empty()) {
    std::cout << dyndom::serialize_trace(trace);
    return 0;
  }
  try {
    dyndom::write_trace_file(opt.trace_path, trace);
  } catch (const dyndom::Error& e) {
    std::cerr << "dyndom: " << e.what() << "\n";
    return 2;
  }
  return 0;
}

int bench_command(const CliOptions& opt, const std::vector<int>& sizes, int steps, double pdel) {
  const auto kind = *dyndom::solver_from_name(opt.solver);
  const auto backend = *dyndom::backend_from_name(opt.backend);
  const auto rows = dyndom::run_scaling_bench(kind, sizes, steps, pdel, opt.seed, backend);
  std::cout << std::setw(8) << "n" << std::setw(10) << "events" << std::setw(14) << "ns/update"
            << std::setw(9) << "maxdeg" << std::setw(10) << "m_max" << std::setw(14)
            << "normalized" << "\n";
  double lo = 0.0, hi = 0.0;
  for (const auto& r : rows) {
    std::cout << std::setw(8) << r.n << std::setw(10) << r.events << std::setw(14) << std::fixed
              << std::setprecision(1) << r.ns_mean << std::setw(9) << r.max_degree
              << std::setw(10) << r.max_edges << std::setw(14) << std::setprecision(3)
              << r.normalized << "\n";
    if (lo == 0.0 || r.normalized < lo) lo = r.normalized;
    if (r.normalized > hi) hi = r.normalized;
  }
  if (lo > 0.0) {
    const double spread = hi / lo;
    std::cout << "trend: normalized spread " << std::setprecision(2) << spread << "x -> "
              << (spread < 10.0 ? "consistent" : "warn") << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"dominating-set maintenance on fully dynamic graphs"};
  app.require_subcommand(1);
  CliOptions opt;

  CLI::App* run = app.add_subcommand("run", "replay a trace through a solver");
  add_common_flags(run, opt, true);
  CLI::App* verify = app.add_subcommand("verify", "replay with oracles on (default every event)");
  add_common_flags(verify, opt, true);
  CLI::App* gen = app.add_subcommand("gen", "generate a trace file (stdout without --trace)");
  gen->add_option("--gen", opt.gen_spec, "n=..,steps=..,pdel=..,seed=..");
  gen->add_option("--trace", opt.trace_path, "output path");
  gen->add_option("--seed", opt.seed, "seed used when the generator spec does not carry one");

  CLI::App* bench = app.add_subcommand("bench", "per-update time across a doubling schedule");
  std::vector<int> sizes{64, 128, 256, 512};
  int steps = 2000;
  double pdel = 0.3;
  add_common_flags(bench, opt, false);
  bench->add_option("--sizes", sizes, "vertex counts to sweep");
  bench->add_option("--steps", steps, "events per size");
  bench->add_option("--pdel", pdel, "deletion probability");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  if (app.got_subcommand(run)) return run_command(opt, false);
  if (app.got_subcommand(verify)) return run_command(opt, true);
  if (app.got_subcommand(gen)) return gen_command(opt);
  return bench_command(opt, sizes, steps, pdel);
}
