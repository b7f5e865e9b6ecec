#pragma once

#include <array>

#include "wf/eeg/features.hpp"

namespace wf::eeg {

enum class ElectrodeState {
  ok,
  transient_artifact,
  dead,
};

struct EegStatus {
  std::array<ElectrodeState, kElectrodes> electrodes{};
  bool device_active = true;

  std::array<bool, kElectrodes> usable() const {
    std::array<bool, kElectrodes> out{};
    for (int e = 0; e < kElectrodes; ++e) {
      out[static_cast<std::size_t>(e)] =
          electrodes[static_cast<std::size_t>(e)] == ElectrodeState::ok;
    }
    return out;
  }
};

// Flatline tracker. An electrode whose window peak-to-peak amplitude drops
// below theta_flat is a transient artifact; t_dead consecutive flat windows
// make it dead; all four dead deactivates the device. Status is a pure
// function of the consecutive-flat counters, so recovery is immediate once
// signal returns.
class ArtifactTracker {
 public:
  struct Config {
    double theta_flat_uv = 1.0;
    int t_dead_windows = 3;
  };

  ArtifactTracker() = default;
  explicit ArtifactTracker(const Config& cfg) : cfg_(cfg) {}

  EegStatus update(const EegWindow& window);
  EegStatus status() const;

 private:
  Config cfg_;
  std::array<int, kElectrodes> flat_run_{};
};

}  // namespace wf::eeg
