#include "wf/session/event.hpp"

#include <stdexcept>

namespace wf::session {

namespace {

nlohmann::json va_to_json(const va::VAPoint& p) {
  return {{"valence", p.valence}, {"arousal", p.arousal},
          {"channel", p.channel_id}, {"end_tick", p.end_tick},
          {"imputed", p.imputed},   {"padded", p.padded}};
}

va::VAPoint va_from_json(const nlohmann::json& j) {
  va::VAPoint p;
  p.valence = j.at("valence").get<double>();
  p.arousal = j.at("arousal").get<double>();
  p.channel_id = j.at("channel").get<int>();
  p.end_tick = j.at("end_tick").get<std::uint64_t>();
  p.imputed = j.at("imputed").get<bool>();
  p.padded = j.at("padded").get<bool>();
  return p;
}

}  // namespace

nlohmann::json SessionEvent::to_json() const {
  nlohmann::json fx = nlohmann::json::array();
  for (const auto& p : va_fx) fx.push_back(va_to_json(p));
  return {
      {"schema_version", schema_version},
      {"tick_ms", tick_ms},
      {"emotional_state",
       {{"attention", attention},
        {"relaxation", relaxation},
        {"eeg_valid", eeg_valid},
        {"eeg_imputed", eeg_imputed},
        {"stress_raw", stress_raw},
        {"stress_norm", stress_norm},
        {"ecg_valid", ecg_valid},
        {"ecg_imputed", ecg_imputed}}},
      {"va_dry", va_to_json(va_dry)},
      {"va_fx", fx},
      {"sensor_status",
       {{"eeg", eeg_active ? "active" : "deactivated"},
        {"ecg", ecg_active ? "active" : "deactivated"}}},
      {"active_ruleset", active_ruleset},
      {"fired_rule", fired_rule},
      {"strength", strength},
      {"raw_gains", raw_gains},
      {"smoothed_gains", smoothed_gains},
  };
}

SessionEvent SessionEvent::from_json(const nlohmann::json& j) {
  SessionEvent e;
  e.schema_version = j.at("schema_version").get<int>();
  if (e.schema_version != kSchemaVersion) {
    throw std::runtime_error("session log: unsupported schema_version " +
                             std::to_string(e.schema_version));
  }
  e.tick_ms = j.at("tick_ms").get<std::uint64_t>();
  const auto& es = j.at("emotional_state");
  e.attention = es.at("attention").get<double>();
  e.relaxation = es.at("relaxation").get<double>();
  e.eeg_valid = es.at("eeg_valid").get<bool>();
  e.eeg_imputed = es.at("eeg_imputed").get<bool>();
  e.stress_raw = es.at("stress_raw").get<double>();
  e.stress_norm = es.at("stress_norm").get<double>();
  e.ecg_valid = es.at("ecg_valid").get<bool>();
  e.ecg_imputed = es.at("ecg_imputed").get<bool>();
  e.va_dry = va_from_json(j.at("va_dry"));
  for (const auto& p : j.at("va_fx")) e.va_fx.push_back(va_from_json(p));
  const auto& ss = j.at("sensor_status");
  e.eeg_active = ss.at("eeg").get<std::string>() == "active";
  e.ecg_active = ss.at("ecg").get<std::string>() == "active";
  e.active_ruleset = j.at("active_ruleset").get<std::string>();
  e.fired_rule = j.at("fired_rule").get<std::string>();
  e.strength = j.at("strength").get<double>();
  e.raw_gains = j.at("raw_gains").get<std::vector<double>>();
  e.smoothed_gains = j.at("smoothed_gains").get<std::vector<double>>();
  return e;
}

JsonlWriter::JsonlWriter(const std::string& path) : out_(path) {
  if (!out_) throw std::runtime_error("session log: cannot open " + path);
}

void JsonlWriter::write(const SessionEvent& event) {
  out_ << event.to_json().dump() << '\n';
  out_.flush();  // append-safe: each line lands before the next tick
  ++written_;
}

std::vector<SessionEvent> read_session_log(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("session log: cannot open " + path);
  std::vector<SessionEvent> events;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    try {
      events.push_back(SessionEvent::from_json(nlohmann::json::parse(line)));
    } catch (const nlohmann::json::exception& e) {
      throw std::runtime_error("session log: " + path + ":" +
                               std::to_string(lineno) + ": " + e.what());
    }
  }
  return events;
}

}  // namespace wf::session
