#include "wf/rules/gains.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace wf::rules {

namespace {

double va_distance(const va::VAPoint& a, const va::VAPoint& b) {
  return std::hypot(a.valence - b.valence, a.arousal - b.arousal);
}

std::map<std::string, GainFunction, std::less<>>& registry() {
  static std::map<std::string, GainFunction, std::less<>> map = [] {
    std::map<std::string, GainFunction, std::less<>> m;
    auto add = [&m](std::string name, std::string blurb, auto score,
                    auto predicate) {
      GainFunction fn;
      fn.name = name;
      fn.blurb = std::move(blurb);
      fn.score = score;
      fn.predicate = predicate;
      m.emplace(std::move(name), std::move(fn));
    };
    using P = const va::VAPoint&;

    add("boost_nearest", "boost the FX channel closest to the dry signal",
        [](P, P, double d) { return -d; }, nullptr);
    add("boost_furthest", "boost the FX channel furthest from the dry signal",
        [](P, P, double d) { return d; }, nullptr);
    add("boost_lowest_arousal", "boost the FX channel with the lowest arousal",
        [](P fx, P, double) { return -fx.arousal; }, nullptr);
    add("boost_far_higher_arousal",
        "boost far FX in the direction of increasing arousal; suppress others",
        [](P, P, double d) { return d; },
        [](P fx, P dry) { return fx.arousal > dry.arousal; });
    add("boost_far_any",
        "boost far FX regardless of direction; suppress close FX",
        [](P, P, double d) { return d; }, nullptr);
    add("boost_near_any", "boost close FX; suppress far FX",
        [](P, P, double d) { return -d; }, nullptr);
    add("boost_near_lower_arousal",
        "boost close FX with lower arousal than the dry signal; suppress the rest",
        [](P, P, double d) { return -d; },
        [](P fx, P dry) { return fx.arousal < dry.arousal; });
    return m;
  }();
  return map;
}

}  // namespace

const GainFunction* find_gain_function(std::string_view name) {
  auto& m = registry();
  const auto it = m.find(name);
  return it == m.end() ? nullptr : &it->second;
}

bool register_gain_function(GainFunction fn) {
  auto& m = registry();
  const std::string name = fn.name;
  return m.emplace(name, std::move(fn)).second;
}

std::vector<std::string> gain_function_names() {
  std::vector<std::string> names;
  for (const auto& [name, fn] : registry()) names.push_back(name);
  return names;
}

std::vector<double> apply_gain_function(const Rule& rule, const RuleInput& in,
                                        double strength,
                                        const GainOptions& opt) {
  const GainFunction* fn = find_gain_function(rule.function);
  if (fn == nullptr) {
    throw std::invalid_argument("unknown gain function '" + rule.function + "'");
  }
  const double s = std::clamp(strength, -1.0, 1.0);
  double tau = opt.tau;
  if (const auto it = rule.params.find("tau"); it != rule.params.end()) {
    tau = it->second;
  }
  if (tau <= 0.0) tau = 1e-6;

  const std::size_t n = in.va_fx.size();
  std::vector<double> gains(n + 1, opt.g_floor);
  gains[0] = 1.0;
  if (const auto it = rule.params.find("dry_gain"); it != rule.params.end()) {
    gains[0] = std::clamp(it->second, 0.0, 1.0);
  }

  std::vector<double> scaled(n, 0.0);
  std::vector<bool> pass(n, false);
  double best = 0.0;
  bool any = false;
  for (std::size_t i = 0; i < n; ++i) {
    const va::VAPoint& fx = in.va_fx[i];
    if (fn->predicate && !fn->predicate(fx, in.va_dry)) continue;
    pass[i] = true;
    scaled[i] = s * fn->score(fx, in.va_dry, va_distance(fx, in.va_dry));
    best = any ? std::max(best, scaled[i]) : scaled[i];
    any = true;
  }
  if (!any) return gains;  // nothing passes: everything at the floor

  for (std::size_t i = 0; i < n; ++i) {
    if (!pass[i]) continue;
    gains[i + 1] = std::max(opt.g_floor, std::exp((scaled[i] - best) / tau));
  }
  return gains;
}

}  // namespace wf::rules
