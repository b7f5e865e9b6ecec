#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace wf::session {

// Engine configuration, loaded from a flat "key = value" file with dotted
// key paths (# comments allowed). Unknown keys are rejected. The full key
// table lives in the README.
struct Config {
  // session.*
  int fx_channels = 2;          // n (FX monitor channels), dry is extra
  double duration_s = 60.0;     // synthetic-source length
  std::uint64_t seed = 1;
  std::string log_path = "session.jsonl";
  bool headless = false;
  std::vector<std::string> ruleset_paths;  // session.rulesets (comma list)

  // streams.*
  std::string eeg_source = "synthetic:sine 10Hz amp 40 noise 4";
  std::string ecg_source = "synthetic:pulse 1.25Hz amp 800 noise 5";
  std::map<int, std::string> audio_sources;  // index 0 = dry

  // eeg.*
  std::size_t eeg_hop_samples = 500;
  double eeg_theta_flat_uv = 1.0;
  int eeg_t_dead_windows = 3;

  // ecg.*
  double ecg_bin_ms = 50.0;
  double ecg_mxdmn_floor_s = 0.016;
  int ecg_min_intervals = 5;
  double ecg_cal_median = 150.0;
  double ecg_cal_spread = 1.0;

  // audio.*
  double audio_hop_s = 1.0;
  std::string audio_estimator = "builtin";  // builtin | external
  std::string audio_external_endpoint;
  std::map<int, std::pair<double, double>> audio_va_override;

  // rules.*
  double rules_tau = 0.3;
  double rules_g_floor = 0.05;

  // mix.*
  int mix_tick_ms = 100;
  double mix_strength = 1.0;
  double mix_smoothing_tau_s = 0.25;

  // midi.*
  std::string midi_port;     // empty = no output
  std::string midi_in_port;  // empty = no performer input
  int midi_channel = 1;
  int midi_cc_base = 20;     // channel i -> CC base + i
  int midi_strength_cc = 1;

  // osc.*
  bool osc_enabled = false;
  std::string osc_host = "127.0.0.1";
  int osc_port = 9000;

  static Config from_file(const std::string& path);
  static Config from_text(const std::string& text,
                          const std::string& source_name = "<config>");

  // Applies one key; throws std::invalid_argument on unknown keys or bad
  // values.
  void apply(const std::string& key, const std::string& value);

  // Cross-field checks; throws std::invalid_argument.
  void validate() const;

  // Source spec for an audio channel, with seeded defaults for channels the
  // file does not name.
  std::string audio_source(int channel) const;

  std::optional<std::pair<double, double>> va_override(int channel) const;

  // Per-stream RNG seeds derived from the session seed.
  std::uint64_t stream_seed(int stream_index) const;
};

}  // namespace wf::session
