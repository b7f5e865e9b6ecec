#include <CLI11.hpp>

#include "wf/session/commands.hpp"

int main(int argc, char** argv) {
  CLI::App app{"witheflow: biosignal-driven gain automation engine"};
  app.require_subcommand(1);

  wf::session::RunOptions run_opts;
  std::string run_log, run_config;
  std::uint64_t run_seed = 0;
  auto* run = app.add_subcommand("run", "run a live or fixture session");
  run->add_option("--config", run_config, "config file (key = value)");
  run->add_option("--rules", run_opts.ruleset_paths, "ruleset YAML files");
  auto* run_log_opt = run->add_option("--log", run_log, "session log path");
  auto* run_seed_opt = run->add_option("--seed", run_seed, "session seed");
  run->add_flag("--headless", run_opts.headless,
                "keep running without a MIDI port");

  std::vector<std::string> validate_paths;
  auto* validate = app.add_subcommand("validate", "check ruleset partitions");
  validate->add_option("rulesets", validate_paths, "ruleset YAML files")
      ->required();

  wf::session::CalibrateOptions cal_opts;
  std::uint64_t cal_seed = 0;
  auto* calibrate =
      app.add_subcommand("calibrate", "record a resting baseline");
  calibrate->add_option("--config", cal_opts.config_path, "config file");
  calibrate->add_option("--duration", cal_opts.duration_s,
                        "calibration length in seconds");
  calibrate->add_option("--out", cal_opts.out_path, "baseline output file");
  auto* cal_seed_opt = calibrate->add_option("--seed", cal_seed, "seed");

  wf::session::ReplayOptions replay_opts;
  double replay_strength = 0.0;
  auto* replay =
      app.add_subcommand("replay", "re-run mixing over a recorded log");
  replay->add_option("--log", replay_opts.log_path, "recorded session log")
      ->required();
  replay->add_option("--rules", replay_opts.ruleset_paths,
                     "ruleset YAML files");
  replay->add_option("--out", replay_opts.out_log_path, "replayed log path");
  replay->add_option("--csv", replay_opts.csv_path, "CSV export path");
  auto* strength_opt = replay->add_option(
      "--strength", replay_strength, "force a strength value in [-1, 1]");

  wf::session::SimulateOptions sim_opts;
  auto* simulate =
      app.add_subcommand("simulate", "synthetic end-to-end demo session");
  simulate->add_option("--duration", sim_opts.duration_s, "seconds");
  simulate->add_option("--seed", sim_opts.seed, "session seed");
  simulate->add_option("--fx", sim_opts.fx_channels, "number of FX channels");
  simulate->add_option("--log", sim_opts.log_path, "session log path");
  simulate->add_option("--rules", sim_opts.ruleset_paths,
                       "ruleset YAML files (default: built-ins)");

  CLI11_PARSE(app, argc, argv);

  if (run->parsed()) {
    run_opts.config_path = run_config;
    if (*run_log_opt) run_opts.log_path = run_log;
    if (*run_seed_opt) run_opts.seed = run_seed;
    return wf::session::cmd_run(run_opts);
  }
  if (validate->parsed()) return wf::session::cmd_validate(validate_paths);
  if (calibrate->parsed()) {
    if (*cal_seed_opt) cal_opts.seed = cal_seed;
    return wf::session::cmd_calibrate(cal_opts);
  }
  if (replay->parsed()) {
    if (*strength_opt) replay_opts.strength_override = replay_strength;
    return wf::session::cmd_replay(replay_opts);
  }
  if (simulate->parsed()) return wf::session::cmd_simulate(sim_opts);
  return 1;
}
