#include <yaml-cpp/yaml.h>

#include <fstream>
#include <sstream>

#include "wf/rules/gains.hpp"
#include "wf/rules/ruleset.hpp"

namespace wf::rules {

namespace {

[[noreturn]] void fail(const std::string& source, const YAML::Node& node,
                       const std::string& path, const std::string& msg) {
  const YAML::Mark mark = node.Mark();
  std::ostringstream text;
  text << source << ":" << (mark.line + 1) << ":" << (mark.column + 1);
  if (!path.empty()) text << ": " << path;
  text << ": " << msg;
  throw ParseError(text.str(), mark.line + 1, mark.column + 1, path);
}

Condition parse_condition(const std::string& source, const YAML::Node& node,
                          const std::string& path, Variable var) {
  if (!node.IsMap() || !node["lo"] || !node["hi"]) {
    fail(source, node, path, "expected a map with 'lo' and 'hi'");
  }
  Condition c;
  c.variable = var;
  try {
    c.lo = node["lo"].as<double>();
    c.hi = node["hi"].as<double>();
  } catch (const YAML::Exception&) {
    fail(source, node, path, "'lo' and 'hi' must be numbers");
  }
  if (!(c.lo < c.hi)) {
    fail(source, node, path, "requires lo < hi");
  }
  const Domain dom = domain_of(var);
  if (c.lo < dom.lo || c.hi > dom.hi) {
    std::ostringstream msg;
    msg << "interval [" << c.lo << ", " << c.hi << ") leaves the "
        << to_string(var) << " domain [" << dom.lo << ", " << dom.hi << "]";
    fail(source, node, path, msg.str());
  }
  return c;
}

Rule parse_rule(const std::string& source, const YAML::Node& node,
                const std::string& path, const std::set<Sensor>& required) {
  if (!node.IsMap()) fail(source, node, path, "rule must be a map");
  Rule rule;

  if (!node["description"]) {
    fail(source, node, path, "missing 'description'");
  }
  rule.description = node["description"].as<std::string>();

  if (!node["function"]) fail(source, node, path, "missing 'function'");
  rule.function = node["function"].as<std::string>();
  if (find_gain_function(rule.function) == nullptr) {
    std::ostringstream msg;
    msg << "unknown gain function '" << rule.function << "'; registered: ";
    bool first = true;
    for (const auto& name : gain_function_names()) {
      if (!first) msg << ", ";
      msg << name;
      first = false;
    }
    fail(source, node["function"], path + ".function", msg.str());
  }

  if (node["conditions"]) {
    const YAML::Node conds = node["conditions"];
    if (!conds.IsMap()) {
      fail(source, conds, path + ".conditions", "conditions must be a map");
    }
    std::set<Variable> seen;
    for (const auto& kv : conds) {
      const auto key = kv.first.as<std::string>();
      const std::string cpath = path + ".conditions." + key;
      const auto var = variable_from_string(key);
      if (!var) fail(source, kv.first, cpath, "unknown variable");
      if (!seen.insert(*var).second) {
        fail(source, kv.first, cpath, "duplicate condition for variable");
      }
      if (required.count(sensor_of(*var)) == 0) {
        std::ostringstream msg;
        msg << "variable '" << key << "' needs sensor '"
            << to_string(sensor_of(*var)) << "' which the ruleset does not require";
        fail(source, kv.first, cpath, msg.str());
      }
      rule.conditions.push_back(parse_condition(source, kv.second, cpath, *var));
    }
  }

  if (node["params"]) {
    const YAML::Node params = node["params"];
    if (!params.IsMap()) {
      fail(source, params, path + ".params", "params must be a map");
    }
    for (const auto& kv : params) {
      try {
        rule.params[kv.first.as<std::string>()] = kv.second.as<double>();
      } catch (const YAML::Exception&) {
        fail(source, kv.second, path + ".params", "param values must be numbers");
      }
    }
  }
  return rule;
}

}  // namespace

Ruleset parse_ruleset(const std::string& yaml_text,
                      const std::string& source_name) {
  YAML::Node root;
  try {
    root = YAML::Load(yaml_text);
  } catch (const YAML::ParserException& e) {
    throw ParseError(source_name + ": " + e.what(), e.mark.line + 1,
                     e.mark.column + 1, "");
  }
  if (!root.IsMap()) fail(source_name, root, "", "ruleset must be a map");

  Ruleset rs;
  if (!root["name"]) fail(source_name, root, "name", "missing 'name'");
  rs.name = root["name"].as<std::string>();

  if (!root["requires"] || !root["requires"].IsSequence() ||
      root["requires"].size() == 0) {
    fail(source_name, root, "requires",
         "missing 'requires' (a non-empty list of eeg/ecg/audio)");
  }
  for (const auto& item : root["requires"]) {
    const auto name = item.as<std::string>();
    const auto sensor = sensor_from_string(name);
    if (!sensor) {
      fail(source_name, item, "requires", "unknown sensor '" + name + "'");
    }
    rs.requires_sensors.insert(*sensor);
  }

  if (root["rules"]) {
    const YAML::Node rules = root["rules"];
    if (!rules.IsSequence()) {
      fail(source_name, rules, "rules", "'rules' must be a list");
    }
    for (std::size_t i = 0; i < rules.size(); ++i) {
      std::ostringstream path;
      path << "rules[" << i << "]";
      rs.rules.push_back(
          parse_rule(source_name, rules[i], path.str(), rs.requires_sensors));
    }
  }
  return rs;
}

Ruleset parse_ruleset_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw ParseError("cannot open ruleset file: " + path, 0, 0, "");
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_ruleset(buf.str(), path);
}

}  // namespace wf::rules
