#pragma once

#include <array>
#include <string>

#include "wf/session/config.hpp"

namespace wf::session {

// Resting-baseline calibration: SI median/spread for normalize_si plus a
// per-electrode amplitude sanity check against eeg.theta_flat_uv.
struct CalibrationReport {
  double si_median = 150.0;
  double si_spread = 1.0;
  std::size_t si_count = 0;  // valid SI emissions observed
  std::array<double, 4> electrode_ptp{};
  std::array<bool, 4> electrode_ok{};
};

// Consumes duration_s of the configured EEG and ECG streams. Throws
// std::invalid_argument when duration_s <= 0 (insufficient data).
CalibrationReport run_calibration(const Config& cfg, double duration_s);

// Writes a config fragment (ecg.calibration.median / .spread) consumable by
// the run command.
void write_calibration_file(const std::string& path,
                            const CalibrationReport& report);

}  // namespace wf::session
