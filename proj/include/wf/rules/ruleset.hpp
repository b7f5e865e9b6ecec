#pragma once

#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "wf/va/features.hpp"

namespace wf::rules {

enum class Variable {
  stress,     // [0, 1], from ECG
  attention,  // [0, 1], from EEG
  valence,    // [-1, 1], dry audio
  arousal,    // [-1, 1], dry audio
};

enum class Sensor {
  eeg,
  ecg,
  audio,
};

struct Domain {
  double lo;
  double hi;
};

const char* to_string(Variable v);
const char* to_string(Sensor s);
std::optional<Variable> variable_from_string(const std::string& name);
std::optional<Sensor> sensor_from_string(const std::string& name);
Domain domain_of(Variable v);
Sensor sensor_of(Variable v);

// Half-open interval [lo, hi); hi == domain top is treated as closed so
// exact partitions of the bounded domain are expressible.
struct Condition {
  Variable variable;
  double lo;
  double hi;

  bool contains(double x) const {
    if (x < lo) return false;
    if (x < hi) return true;
    return x == hi && hi == domain_of(variable).hi;
  }
};

struct Rule {
  std::string description;
  std::vector<Condition> conditions;  // conjunction, at most one per variable
  std::string function;               // registered gain sub-function
  std::map<std::string, double> params;
};

struct Ruleset {
  std::string name;
  std::set<Sensor> requires_sensors;
  std::vector<Rule> rules;

  // Variables the partition is checked over (those of required sensors).
  std::vector<Variable> required_variables() const;
};

struct ParseError : std::runtime_error {
  ParseError(const std::string& msg, int line, int column, std::string path);

  int line;
  int column;
  std::string path;  // field path, e.g. "rules[2].conditions.stress"
};

// Parses and structurally validates one YAML ruleset (registry lookup of
// function names, interval sanity, duplicate-variable rejection, variables
// restricted to required sensors). Throws ParseError.
Ruleset parse_ruleset(const std::string& yaml_text,
                      const std::string& source_name = "<string>");
Ruleset parse_ruleset_file(const std::string& path);

// Inputs the piecewise function is evaluated over.
struct RuleInput {
  double stress = 0.5;     // normalized SI
  double attention = 0.5;
  va::VAPoint va_dry;
  std::vector<va::VAPoint> va_fx;  // n >= 1

  double value_of(Variable v) const;
};

// The unique rule whose box contains the input. Preconditions: the ruleset
// validated ok. Throws std::logic_error if no rule fires.
const Rule& select_rule(const Ruleset& rs, const RuleInput& in);

}  // namespace wf::rules
