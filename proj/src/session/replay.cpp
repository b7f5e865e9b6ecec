#include "wf/session/replay.hpp"

#include <cstdio>
#include <fstream>
#include <stdexcept>

#include "wf/mix/controller.hpp"

namespace wf::session {

std::vector<SessionEvent> replay_events(
    const std::vector<SessionEvent>& recorded,
    std::vector<rules::Ruleset> rulesets, const Config& cfg,
    std::optional<double> strength_override) {
  std::vector<SessionEvent> out;
  if (recorded.empty()) return out;

  mix::MixController::Config mc;
  mc.gains.tau = cfg.rules_tau;
  mc.gains.g_floor = cfg.rules_g_floor;
  mc.midi.midi_channel = cfg.midi_channel;
  mc.midi.cc_base = cfg.midi_cc_base;
  mc.midi.strength_cc = cfg.midi_strength_cc;
  mc.midi.num_channels = static_cast<int>(recorded.front().raw_gains.size());
  mc.smoothing_tau_s = cfg.mix_smoothing_tau_s;
  mix::MixController mixer(std::move(rulesets), mc);

  std::uint64_t prev_tick = recorded.front().tick_ms;
  for (const SessionEvent& ev : recorded) {
    if (ev.raw_gains.size() != recorded.front().raw_gains.size()) {
      throw std::runtime_error("replay: gain vector length changes mid-log");
    }
    mix::FeatureSnapshot snap;
    snap.eeg.attention = ev.attention;
    snap.eeg.relaxation = ev.relaxation;
    snap.eeg.valid = ev.eeg_valid;
    snap.eeg.imputed = ev.eeg_imputed;
    snap.stress.si_raw = ev.stress_raw;
    snap.stress.si_norm = ev.stress_norm;
    snap.stress.valid = ev.ecg_valid;
    snap.stress.imputed = ev.ecg_imputed;
    snap.va_dry = ev.va_dry;
    snap.va_fx = ev.va_fx;
    snap.sensors.eeg_active = ev.eeg_active;
    snap.sensors.ecg_active = ev.ecg_active;

    mixer.set_strength(strength_override ? *strength_override : ev.strength);
    const double dt_s =
        ev.tick_ms > prev_tick
            ? static_cast<double>(ev.tick_ms - prev_tick) / 1000.0
            : cfg.mix_tick_ms / 1000.0;
    prev_tick = ev.tick_ms;

    const mix::TickResult r = mixer.tick(snap, dt_s);
    SessionEvent copy = ev;
    copy.active_ruleset = r.ruleset_name;
    copy.fired_rule = r.rule_description;
    copy.strength = r.strength;
    copy.raw_gains = r.raw_gains;
    copy.smoothed_gains = r.smoothed_gains;
    out.push_back(std::move(copy));
  }
  return out;
}

void write_csv(const std::string& path,
               const std::vector<SessionEvent>& events) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("csv: cannot open " + path);

  const std::size_t n = events.empty() ? 0 : events.front().raw_gains.size();
  out << "tick_ms,attention,relaxation,stress_norm,stress_raw,"
         "valence_dry,arousal_dry";
  for (std::size_t i = 0; i < n; ++i) out << ",raw_gain_" << i;
  for (std::size_t i = 0; i < n; ++i) out << ",smoothed_gain_" << i;
  out << "\n";

  char buf[32];
  auto num = [&](double v) {
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return std::string(buf);
  };
  for (const SessionEvent& ev : events) {
    out << ev.tick_ms << ',' << num(ev.attention) << ',' << num(ev.relaxation)
        << ',' << num(ev.stress_norm) << ',' << num(ev.stress_raw) << ','
        << num(ev.va_dry.valence) << ',' << num(ev.va_dry.arousal);
    for (double g : ev.raw_gains) out << ',' << num(g);
    for (double g : ev.smoothed_gains) out << ',' << num(g);
    out << "\n";
  }
}

}  // namespace wf::session
