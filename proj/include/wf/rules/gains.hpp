#pragma once

#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "wf/rules/ruleset.hpp"

namespace wf::rules {

// A registered gain sub-function: a per-FX score over VA geometry plus an
// optional directional predicate. Channels failing the predicate are pinned
// at the gain floor; passing channels get
//   g_i = max(g_floor, exp((s * score_i - max_j s * score_j) / tau))
// so the best-scoring channel sits at 1, strength s = 0 flattens the field
// and s < 0 reverses the ordering.
struct GainFunction {
  std::string name;
  std::string blurb;
  // score(fx, dry, distance)
  std::function<double(const va::VAPoint&, const va::VAPoint&, double)> score;
  // pass(fx, dry); nullptr = all channels pass
  std::function<bool(const va::VAPoint&, const va::VAPoint&)> predicate;
};

// Registry of: boost_nearest, boost_furthest, boost_lowest_arousal,
// boost_far_higher_arousal, boost_far_any, boost_near_any,
// boost_near_lower_arousal. Extensible in code via register_gain_function.
const GainFunction* find_gain_function(std::string_view name);
bool register_gain_function(GainFunction fn);  // false if the name exists
std::vector<std::string> gain_function_names();

struct GainOptions {
  double tau = 0.3;      // softmax temperature
  double g_floor = 0.05; // suppression floor, config-overridable to 0
};

// Gains for dry + n FX channels, index 0 = dry (1 unless the rule's params
// set dry_gain). strength in [-1, 1]; rule params may override tau.
std::vector<double> apply_gain_function(const Rule& rule, const RuleInput& in,
                                        double strength,
                                        const GainOptions& opt = {});

}  // namespace wf::rules
