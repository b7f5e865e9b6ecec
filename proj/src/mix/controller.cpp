#include "wf/mix/controller.hpp"

#include <algorithm>
#include <stdexcept>

namespace wf::mix {

MixController::MixController(std::vector<rules::Ruleset> rulesets,
                             const Config& cfg)
    : rulesets_(std::move(rulesets)),
      cfg_(cfg),
      smoother_(cfg.smoothing_tau_s),
      emitter_(cfg.midi),
      strength_(cfg.initial_strength) {
  validate_rulesets(rulesets_);
  const rules::Ruleset* initial = choose_ruleset(SensorStatus{});
  if (initial == nullptr) {
    throw std::invalid_argument(
        "mix: no ruleset eligible with all sensors active");
  }
  active_ = initial->name;
}

void MixController::validate_rulesets(
    const std::vector<rules::Ruleset>& rulesets) {
  if (rulesets.empty()) {
    throw std::invalid_argument("mix: at least one ruleset is required");
  }
  for (const rules::Ruleset& rs : rulesets) {
    const rules::PartitionReport report = rules::validate_partition(rs);
    if (!report.ok()) {
      throw std::invalid_argument("mix: ruleset fails partition validation:\n" +
                                  report.summary(rs));
    }
  }
}

const rules::Ruleset* MixController::choose_ruleset(
    const SensorStatus& sensors) const {
  const rules::Ruleset* best = nullptr;
  std::size_t best_size = 0;
  for (const rules::Ruleset& rs : rulesets_) {
    bool eligible = true;
    for (rules::Sensor s : rs.requires_sensors) {
      if ((s == rules::Sensor::eeg && !sensors.eeg_active) ||
          (s == rules::Sensor::ecg && !sensors.ecg_active)) {
        eligible = false;
        break;
      }
    }
    if (!eligible) continue;
    if (best == nullptr || rs.requires_sensors.size() > best_size) {
      best = &rs;
      best_size = rs.requires_sensors.size();
    }
  }
  return best;
}

TickResult MixController::tick(const FeatureSnapshot& snapshot, double dt_s) {
  TickResult out;

  const rules::Ruleset* rs = choose_ruleset(snapshot.sensors);
  if (rs != nullptr && rs->name != active_) {
    active_ = rs->name;
    out.ruleset_switched = true;
  }
  if (rs == nullptr) {
    // No eligible ruleset for the degraded sensor set: hold the current one.
    const auto it = std::find_if(
        rulesets_.begin(), rulesets_.end(),
        [&](const rules::Ruleset& r) { return r.name == active_; });
    rs = &*it;
  }

  rules::RuleInput input;
  input.stress = std::clamp(snapshot.stress.si_norm, 0.0, 1.0);
  input.attention = std::clamp(snapshot.eeg.attention, 0.0, 1.0);
  input.va_dry = snapshot.va_dry;
  input.va_fx = snapshot.va_fx;

  const rules::Rule& rule = rules::select_rule(*rs, input);
  out.ruleset_name = rs->name;
  out.rule_description = rule.description;
  out.strength = strength_.load();
  out.raw_gains = rules::apply_gain_function(rule, input, out.strength,
                                             cfg_.gains);
  out.smoothed_gains = smoother_.step(out.raw_gains, dt_s);
  out.midi = emitter_.update(out.smoothed_gains);
  out.midi_bytes = emitter_.encode(out.midi);
  return out;
}

}  // namespace wf::mix
