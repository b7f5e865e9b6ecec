#pragma once

#include <optional>
#include <string>
#include <vector>

#include "wf/rules/ruleset.hpp"
#include "wf/session/config.hpp"
#include "wf/session/event.hpp"

namespace wf::session {

// Re-runs rule selection, gain computation, smoothing and ruleset switching
// over the features recorded in a session log. With the original rulesets
// and no strength override the produced gains are bit-identical to the
// recorded ones.
std::vector<SessionEvent> replay_events(
    const std::vector<SessionEvent>& recorded,
    std::vector<rules::Ruleset> rulesets, const Config& cfg,
    std::optional<double> strength_override = std::nullopt);

// Plot-friendly export: tick, features, raw and smoothed gains.
void write_csv(const std::string& path,
               const std::vector<SessionEvent>& events);

}  // namespace wf::session
