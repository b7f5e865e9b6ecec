#include "wf/session/commands.hpp"

#include <exception>
#include <iostream>

#include "wf/mix/osc.hpp"
#include "wf/rules/partition.hpp"
#include "wf/session/calibrate.hpp"
#include "wf/session/engine.hpp"
#include "wf/session/replay.hpp"

namespace wf::session {

namespace {

std::vector<rules::Ruleset> load_rulesets(
    const std::vector<std::string>& paths) {
  std::vector<rules::Ruleset> out;
  for (const std::string& path : paths) {
    out.push_back(rules::parse_ruleset_file(path));
  }
  return out;
}

// Partition-validate every ruleset, printing witnesses for violations.
bool report_validation(const std::vector<rules::Ruleset>& rulesets) {
  bool all_ok = true;
  for (const rules::Ruleset& rs : rulesets) {
    const rules::PartitionReport report = rules::validate_partition(rs);
    std::cout << report.summary(rs);
    all_ok = all_ok && report.ok();
  }
  return all_ok;
}

}  // namespace

std::vector<rules::Ruleset> builtin_rulesets() {
  using rules::Condition;
  using rules::Rule;
  using rules::Ruleset;
  using rules::Sensor;
  using rules::Variable;

  auto rule = [](std::string description, std::vector<Condition> conditions,
                 std::string function) {
    Rule r;
    r.description = std::move(description);
    r.conditions = std::move(conditions);
    r.function = std::move(function);
    return r;
  };

  Ruleset full;
  full.name = "full";
  full.requires_sensors = {Sensor::eeg, Sensor::ecg, Sensor::audio};
  full.rules = {
      rule("High stress, high attention: boost far FX in the direction of "
           "increasing arousal",
           {{Variable::stress, 0.5, 1.0}, {Variable::attention, 0.5, 1.0}},
           "boost_far_higher_arousal"),
      rule("High stress, low attention: boost far FX regardless of direction",
           {{Variable::stress, 0.5, 1.0}, {Variable::attention, 0.0, 0.5}},
           "boost_far_any"),
      rule("Low stress, high attention: boost FX close to the dry signal",
           {{Variable::stress, 0.0, 0.5}, {Variable::attention, 0.5, 1.0}},
           "boost_near_any"),
      rule("Low stress, low attention: boost close FX with lower arousal",
           {{Variable::stress, 0.0, 0.5}, {Variable::attention, 0.0, 0.5}},
           "boost_near_lower_arousal"),
  };

  Ruleset eeg_only;
  eeg_only.name = "eeg-only";
  eeg_only.requires_sensors = {Sensor::eeg, Sensor::audio};
  eeg_only.rules = {
      rule("High attention: boost far FX in the direction of increasing "
           "arousal",
           {{Variable::attention, 0.5, 1.0}}, "boost_far_higher_arousal"),
      rule("Low attention: boost close FX with lower arousal",
           {{Variable::attention, 0.0, 0.5}}, "boost_near_lower_arousal"),
  };

  Ruleset ecg_only;
  ecg_only.name = "ecg-only";
  ecg_only.requires_sensors = {Sensor::ecg, Sensor::audio};
  ecg_only.rules = {
      rule("High stress: boost far FX regardless of direction",
           {{Variable::stress, 0.5, 1.0}}, "boost_far_any"),
      rule("Low stress: boost FX close to the dry signal",
           {{Variable::stress, 0.0, 0.5}}, "boost_near_any"),
  };

  Ruleset audio_only;
  audio_only.name = "audio-only";
  audio_only.requires_sensors = {Sensor::audio};
  audio_only.rules = {
      rule("Energetic dry signal: boost the lowest-arousal FX",
           {{Variable::arousal, 0.0, 1.0}}, "boost_lowest_arousal"),
      rule("Calm dry signal: boost the FX nearest to the dry signal",
           {{Variable::arousal, -1.0, 0.0}}, "boost_nearest"),
  };

  return {full, eeg_only, ecg_only, audio_only};
}

int cmd_run(const RunOptions& opts) {
  try {
    Config cfg = opts.config_path.empty() ? Config{}
                                          : Config::from_file(opts.config_path);
    if (opts.seed) cfg.seed = *opts.seed;
    if (opts.log_path) cfg.log_path = *opts.log_path;
    if (opts.headless) cfg.headless = true;

    std::vector<std::string> paths = opts.ruleset_paths;
    if (paths.empty()) paths = cfg.ruleset_paths;
    std::vector<rules::Ruleset> rulesets =
        paths.empty() ? builtin_rulesets() : load_rulesets(paths);
    if (!report_validation(rulesets)) {
      std::cerr << "run: ruleset validation failed\n";
      return 2;
    }

    Engine engine(cfg, std::move(rulesets));
    JsonlWriter log(cfg.log_path);
    auto midi = mix::open_midi_sink(cfg.midi_port, cfg.headless);
    mix::OscSender osc;
    if (cfg.osc_enabled) osc.open(cfg.osc_host, cfg.osc_port);

    const Engine::RunStats stats = engine.run(&log, midi.get(), &osc);
    std::cout << "run: " << stats.decision_ticks << " decision ticks, "
              << log.written() << " events -> " << cfg.log_path << "\n";
    return 0;
  } catch (const std::exception& e) {
    std::cerr << "run: " << e.what() << "\n";
    return 1;
  }
}

int cmd_validate(const std::vector<std::string>& ruleset_paths) {
  if (ruleset_paths.empty()) {
    std::cerr << "validate: no ruleset files given\n";
    return 2;
  }
  bool all_ok = true;
  for (const std::string& path : ruleset_paths) {
    try {
      const rules::Ruleset rs = rules::parse_ruleset_file(path);
      const rules::PartitionReport report = rules::validate_partition(rs);
      std::cout << report.summary(rs);
      all_ok = all_ok && report.ok();
    } catch (const std::exception& e) {
      std::cerr << "validate: " << e.what() << "\n";
      all_ok = false;
    }
  }
  return all_ok ? 0 : 1;
}

int cmd_calibrate(const CalibrateOptions& opts) {
  try {
    Config cfg = opts.config_path.empty() ? Config{}
                                          : Config::from_file(opts.config_path);
    if (opts.seed) cfg.seed = *opts.seed;

    const CalibrationReport report = run_calibration(cfg, opts.duration_s);
    std::cout << "calibrate: " << report.si_count
              << " stress samples, baseline median = " << report.si_median
              << ", spread = " << report.si_spread << "\n";
    static const char* kNames[4] = {"O1", "O2", "T3", "T4"};
    for (int e = 0; e < 4; ++e) {
      std::cout << "calibrate: electrode " << kNames[e] << " peak-to-peak "
                << report.electrode_ptp[static_cast<std::size_t>(e)] << " uV: "
                << (report.electrode_ok[static_cast<std::size_t>(e)] ? "PASS"
                                                                     : "FAIL")
                << "\n";
    }
    write_calibration_file(opts.out_path, report);
    std::cout << "calibrate: baseline written to " << opts.out_path << "\n";
    return 0;
  } catch (const std::exception& e) {
    std::cerr << "calibrate: " << e.what() << "\n";
    return 1;
  }
}

int cmd_replay(const ReplayOptions& opts) {
  try {
    const std::vector<SessionEvent> recorded = read_session_log(opts.log_path);
    if (recorded.empty()) {
      std::cerr << "replay: log is empty\n";
      return 1;
    }
    std::vector<rules::Ruleset> rulesets =
        opts.ruleset_paths.empty() ? builtin_rulesets()
                                   : load_rulesets(opts.ruleset_paths);
    if (!report_validation(rulesets)) {
      std::cerr << "replay: ruleset validation failed\n";
      return 2;
    }
    const Config cfg;  // replay uses stock gain/smoothing parameters
    const std::vector<SessionEvent> replayed =
        replay_events(recorded, std::move(rulesets), cfg,
                      opts.strength_override);
    if (!opts.out_log_path.empty()) {
      JsonlWriter out(opts.out_log_path);
      for (const SessionEvent& ev : replayed) out.write(ev);
    }
    if (!opts.csv_path.empty()) write_csv(opts.csv_path, replayed);
    std::cout << "replay: " << replayed.size() << " ticks re-evaluated\n";
    return 0;
  } catch (const std::exception& e) {
    std::cerr << "replay: " << e.what() << "\n";
    return 1;
  }
}

int cmd_simulate(const SimulateOptions& opts) {
  try {
    Config cfg;
    cfg.duration_s = opts.duration_s;
    cfg.seed = opts.seed;
    cfg.fx_channels = opts.fx_channels;
    cfg.log_path = opts.log_path;
    cfg.headless = true;

    std::vector<rules::Ruleset> rulesets =
        opts.ruleset_paths.empty() ? builtin_rulesets()
                                   : load_rulesets(opts.ruleset_paths);
    if (!report_validation(rulesets)) {
      std::cerr << "simulate: ruleset validation failed\n";
      return 2;
    }
    Engine engine(cfg, std::move(rulesets));
    JsonlWriter log(cfg.log_path);
    const Engine::RunStats stats = engine.run(&log);
    std::cout << "simulate: " << opts.duration_s << " s, "
              << stats.decision_ticks << " decision ticks -> " << cfg.log_path
              << "\n";
    return 0;
  } catch (const std::exception& e) {
    std::cerr << "simulate: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace wf::session
