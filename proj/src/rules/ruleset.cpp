#include "wf/rules/ruleset.hpp"

#include <algorithm>

namespace wf::rules {

const char* to_string(Variable v) {
  switch (v) {
    case Variable::stress: return "stress";
    case Variable::attention: return "attention";
    case Variable::valence: return "valence";
    case Variable::arousal: return "arousal";
  }
  return "?";
}

const char* to_string(Sensor s) {
  switch (s) {
    case Sensor::eeg: return "eeg";
    case Sensor::ecg: return "ecg";
    case Sensor::audio: return "audio";
  }
  return "?";
}

std::optional<Variable> variable_from_string(const std::string& name) {
  if (name == "stress") return Variable::stress;
  if (name == "attention") return Variable::attention;
  if (name == "valence") return Variable::valence;
  if (name == "arousal") return Variable::arousal;
  return std::nullopt;
}

std::optional<Sensor> sensor_from_string(const std::string& name) {
  if (name == "eeg") return Sensor::eeg;
  if (name == "ecg") return Sensor::ecg;
  if (name == "audio") return Sensor::audio;
  return std::nullopt;
}

Domain domain_of(Variable v) {
  switch (v) {
    case Variable::stress:
    case Variable::attention:
      return {0.0, 1.0};
    case Variable::valence:
    case Variable::arousal:
      return {-1.0, 1.0};
  }
  return {0.0, 1.0};
}

Sensor sensor_of(Variable v) {
  switch (v) {
    case Variable::stress: return Sensor::ecg;
    case Variable::attention: return Sensor::eeg;
    case Variable::valence:
    case Variable::arousal:
      return Sensor::audio;
  }
  return Sensor::audio;
}

std::vector<Variable> Ruleset::required_variables() const {
  std::vector<Variable> out;
  for (Variable v : {Variable::stress, Variable::attention, Variable::valence,
                     Variable::arousal}) {
    if (requires_sensors.count(sensor_of(v)) > 0) out.push_back(v);
  }
  return out;
}

ParseError::ParseError(const std::string& msg, int line_, int column_,
                       std::string path_)
    : std::runtime_error(msg), line(line_), column(column_),
      path(std::move(path_)) {}

double RuleInput::value_of(Variable v) const {
  switch (v) {
    case Variable::stress: return stress;
    case Variable::attention: return attention;
    case Variable::valence: return va_dry.valence;
    case Variable::arousal: return va_dry.arousal;
  }
  return 0.0;
}

const Rule& select_rule(const Ruleset& rs, const RuleInput& in) {
  for (const Rule& rule : rs.rules) {
    const bool hit =
        std::all_of(rule.conditions.begin(), rule.conditions.end(),
                    [&](const Condition& c) {
                      return c.contains(in.value_of(c.variable));
                    });
    if (hit) return rule;
  }
  throw std::logic_error("select_rule: no rule fires in ruleset '" + rs.name +
                         "' (ruleset not validated?)");
}

}  // namespace wf::rules
