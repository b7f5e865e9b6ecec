#pragma once

#include <atomic>
#include <string>
#include <vector>

#include "wf/ecg/baevsky.hpp"
#include "wf/eeg/features.hpp"
#include "wf/mix/midi.hpp"
#include "wf/mix/smoother.hpp"
#include "wf/rules/gains.hpp"
#include "wf/rules/partition.hpp"

namespace wf::mix {

struct SensorStatus {
  bool eeg_active = true;
  bool ecg_active = true;
  // audio is the performance itself; always active
};

// Latest-value join of the feature streams, snapshotted at tick start.
struct FeatureSnapshot {
  eeg::AttentionRelaxation eeg;
  ecg::StressIndex stress;
  va::VAPoint va_dry;
  std::vector<va::VAPoint> va_fx;
  SensorStatus sensors;
};

struct TickResult {
  std::string ruleset_name;
  std::string rule_description;
  double strength = 1.0;
  std::vector<double> raw_gains;
  std::vector<double> smoothed_gains;
  std::vector<CcMessage> midi;
  std::vector<std::uint8_t> midi_bytes;
  bool ruleset_switched = false;
};

// The 100 ms decision stage. Owns the validated rulesets, the smoother and
// the CC emitter; selects the active ruleset from sensor status each tick
// (largest satisfied requires-set wins, ties go to load order, no
// hysteresis). Strength arrives from the MIDI input thread through an
// atomic and is read once per tick.
class MixController {
 public:
  struct Config {
    rules::GainOptions gains;
    MidiMap midi;
    double smoothing_tau_s = 0.25;
    double initial_strength = 1.0;
  };

  MixController(std::vector<rules::Ruleset> rulesets, const Config& cfg);

  // Throws std::invalid_argument when a ruleset fails partition validation
  // or none is eligible with all sensors active.
  static void validate_rulesets(const std::vector<rules::Ruleset>& rulesets);

  TickResult tick(const FeatureSnapshot& snapshot, double dt_s);

  void on_strength_cc(int value) { strength_.store(strength_from_cc(value)); }
  void set_strength(double s) { strength_.store(s); }
  double strength() const { return strength_.load(); }

  const std::string& active_ruleset() const { return active_; }

 private:
  const rules::Ruleset* choose_ruleset(const SensorStatus& sensors) const;

  std::vector<rules::Ruleset> rulesets_;
  Config cfg_;
  GainSmoother smoother_;
  CcEmitter emitter_;
  std::atomic<double> strength_;
  std::string active_;
};

}  // namespace wf::mix
