#include "wf/eeg/artifact.hpp"

#include <algorithm>

namespace wf::eeg {

EegStatus ArtifactTracker::update(const EegWindow& window) {
  for (int e = 0; e < kElectrodes; ++e) {
    const auto& samples = window.samples[static_cast<std::size_t>(e)];
    auto [lo, hi] = std::minmax_element(samples.begin(), samples.end());
    const double ptp = samples.empty() ? 0.0 : *hi - *lo;
    auto& run = flat_run_[static_cast<std::size_t>(e)];
    if (ptp < cfg_.theta_flat_uv) {
      ++run;
    } else {
      run = 0;
    }
  }
  return status();
}

EegStatus ArtifactTracker::status() const {
  EegStatus out;
  bool all_dead = true;
  for (int e = 0; e < kElectrodes; ++e) {
    const int run = flat_run_[static_cast<std::size_t>(e)];
    ElectrodeState state = ElectrodeState::ok;
    if (run >= cfg_.t_dead_windows) {
      state = ElectrodeState::dead;
    } else if (run >= 1) {
      state = ElectrodeState::transient_artifact;
    }
    out.electrodes[static_cast<std::size_t>(e)] = state;
    all_dead = all_dead && state == ElectrodeState::dead;
  }
  out.device_active = !all_dead;
  return out;
}

}  // namespace wf::eeg
