#include "zeno/cli.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include <CLI11.hpp>

#include "zeno/config.hpp"
#include "zeno/errors.hpp"
#include "zeno/experiments.hpp"
#include "zeno/oracle_suite.hpp"
#include "zeno/output.hpp"

#ifndef ZENO_VERSION
#define ZENO_VERSION "0.0.0"
#endif

namespace zeno {

namespace {

TimeSeries run_chain_schedule(const RunConfig& cfg) {
  const CompositeModel model = build_total_hamiltonian(cfg.chain, cfg.apparatus);
  return run_schedule(DensityMatrix::basis(cfg.chain.sites, 0), cfg.schedule, model);
}

int execute(const RunConfig& cfg, const OracleOptions& oracle_opts, bool progress, std::ostream& out) {
  const SweepOptions sweep{cfg.threads, progress};
  switch (cfg.command) {
    case Command::TraceDistance: {
      const Curve c = curve_trace_distance(cfg.apparatus.delta, cfg.qubit, *cfg.axis1);
      emit_curve(c, make_header(cfg, {"t_m", "value", "linear_approx"}), cfg.output, out);
      break;
    }
    case Command::T1Curve: {
      const Curve c = curve_t1_vs_delta(cfg.qubit, *cfg.axis1);
      emit_curve(c, make_header(cfg, {"delta", "value"}), cfg.output, out);
      break;
    }
    case Command::Survival:
    case Command::Evolve:
      emit_curve(run_chain_schedule(cfg), make_header(cfg, {"t", "value", "segment"}), cfg.output, out);
      break;
    case Command::MapTTf: {
      const HeatmapResult h =
          map_t_tf(cfg.chain, cfg.apparatus.g, cfg.apparatus.delta, *cfg.axis1, *cfg.axis2, sweep);
      emit_heatmap(h, make_header(cfg, {"t", "t_f", "value", "masked"}), cfg.output, out);
      break;
    }
    case Command::MapTmTf: {
      const HeatmapResult h =
          map_tm_tf(cfg.chain, cfg.apparatus.delta, *cfg.axis1, *cfg.axis2, cfg.eval_t, sweep);
      emit_heatmap(h, make_header(cfg, {"t_m", "t_f", "value", "masked"}), cfg.output, out);
      break;
    }
    case Command::MapTmTd: {
      const HeatmapResult h =
          map_tm_td(cfg.chain, cfg.apparatus.delta, *cfg.axis1, *cfg.axis2, cfg.eval_t, sweep);
      emit_heatmap(h, make_header(cfg, {"t_m", "t_d", "value", "masked"}), cfg.output, out);
      break;
    }
    case Command::Repfintime: {
      const auto family = curve_repfintime(cfg.chain, cfg.apparatus.delta, cfg.t_d, cfg.axis1->values(),
                                           cfg.schedule.total_time, cfg.schedule.sample_dt);
      write_text(render_family(family, make_header(cfg, {"t_m", "t", "value", "segment"})), cfg.output, out);
      break;
    }
    case Command::AnalyticCheck: {
      const auto checks = run_oracle_suite(oracle_opts);
      std::ostringstream report;
      const bool ok = print_oracle_report(checks, report);
      write_text(report.str(), cfg.output, out);
      return ok ? kExitOk : kExitOracle;
    }
  }
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Repeated finite-time premeasurements of a tight-binding chain", "zeno"};
  app.set_version_flag("--version", std::string(ZENO_VERSION));

  std::map<std::string, std::string> flag_storage;
  for (const std::string& key : config_keys()) {
    app.add_option("--" + key, flag_storage[key], "config key '" + key + "'");
  }
  std::string config_path;
  bool inject_fault = false;
  bool progress = false;
  app.add_option("--config", config_path, "flat key = value config file (or an emitted output file)");
  app.add_flag("--inject-fault", inject_fault, "analytic-check self test: perturb one propagator entry");
  app.add_flag("--progress", progress, "sweep progress on stderr");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitConfig;
  }

  try {
    KeyValues flags;
    for (const std::string& key : config_keys()) {
      if (app.count("--" + key) > 0) flags[key] = flag_storage[key];
    }
    const KeyValues file = config_path.empty() ? KeyValues{} : read_config_file(config_path);
    const RunConfig cfg = resolve_config(file, flags);
    if (inject_fault && cfg.command != Command::AnalyticCheck) {
      throw ConfigError("--inject-fault only applies to analytic-check");
    }
    return execute(cfg, OracleOptions{inject_fault}, progress, out);
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitRuntime;
  }
}

}  // namespace zeno
