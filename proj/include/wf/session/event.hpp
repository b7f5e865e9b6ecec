#pragma once

#include <cstdint>
#include <fstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "wf/va/features.hpp"

namespace wf::session {

constexpr int kSchemaVersion = 1;

// One explainability record per decision tick; serializes to a single JSON
// line and round-trips losslessly.
struct SessionEvent {
  int schema_version = kSchemaVersion;
  std::uint64_t tick_ms = 0;

  // emotional state
  double attention = 0.5;
  double relaxation = 0.5;
  bool eeg_valid = false;
  bool eeg_imputed = true;
  double stress_raw = 0.0;
  double stress_norm = 0.25;
  bool ecg_valid = false;
  bool ecg_imputed = true;

  va::VAPoint va_dry;
  std::vector<va::VAPoint> va_fx;

  bool eeg_active = true;
  bool ecg_active = true;

  std::string active_ruleset;
  std::string fired_rule;
  double strength = 1.0;
  std::vector<double> raw_gains;
  std::vector<double> smoothed_gains;

  nlohmann::json to_json() const;
  static SessionEvent from_json(const nlohmann::json& j);
};

class JsonlWriter {
 public:
  explicit JsonlWriter(const std::string& path);

  void write(const SessionEvent& event);
  std::size_t written() const { return written_; }

 private:
  std::ofstream out_;
  std::size_t written_ = 0;
};

// Loads a JSONL session log; throws std::runtime_error on I/O failure,
// malformed JSON, or a schema_version mismatch.
std::vector<SessionEvent> read_session_log(const std::string& path);

}  // namespace wf::session
