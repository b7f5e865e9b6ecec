#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "wf/rules/ruleset.hpp"

namespace wf::session {

// CLI entry points; each returns a process exit code and reports through
// stdout/stderr. The thin main() in tools/ only parses flags.

struct RunOptions {
  std::string config_path;               // empty = defaults
  std::vector<std::string> ruleset_paths;
  std::optional<std::string> log_path;
  std::optional<std::uint64_t> seed;
  bool headless = false;
};

struct CalibrateOptions {
  std::string config_path;
  double duration_s = 60.0;
  std::string out_path = "calibration.conf";
  std::optional<std::uint64_t> seed;
};

struct ReplayOptions {
  std::string log_path;
  std::vector<std::string> ruleset_paths;
  std::string out_log_path;  // empty = no JSONL output
  std::string csv_path;      // empty = no CSV export
  std::optional<double> strength_override;
};

struct SimulateOptions {
  double duration_s = 60.0;
  std::uint64_t seed = 1;
  int fx_channels = 2;
  std::string log_path = "simulated.jsonl";
  std::vector<std::string> ruleset_paths;  // empty = built-in defaults
};

int cmd_run(const RunOptions& opts);
int cmd_validate(const std::vector<std::string>& ruleset_paths);
int cmd_calibrate(const CalibrateOptions& opts);
int cmd_replay(const ReplayOptions& opts);
int cmd_simulate(const SimulateOptions& opts);

// The four stock rulesets (full, eeg-only, ecg-only, audio-only),
// constructed in code; the YAML files under rulesets/ carry the same
// content for users to copy and edit.
std::vector<rules::Ruleset> builtin_rulesets();

}  // namespace wf::session
