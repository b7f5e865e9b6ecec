#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "wf/kernels/exec.hpp"

namespace wf::eeg {

constexpr int kElectrodes = 4;  // O1, O2, T3, T4
constexpr int kSampleRateHz = 250;
constexpr std::size_t kWindowSamples = 1000;  // 4 s
constexpr double kAlphaLoHz = 8.0;
constexpr double kAlphaHiHz = 13.0;
constexpr double kBetaLoHz = 13.0;
constexpr double kBetaHiHz = 30.0;

struct EegWindow {
  std::array<std::vector<double>, kElectrodes> samples;  // microvolts, 1000 each
  std::uint64_t end_tick = 0;
};

struct BandPowers {
  double alpha = 0.0;
  double beta = 0.0;
};

struct AttentionRelaxation {
  double attention = 0.5;
  double relaxation = 0.5;
  bool valid = false;
  bool imputed = true;
  std::uint64_t end_tick = 0;
};

// Hann-windowed periodogram power summed over DFT bins whose center
// frequency k * 250/1000 lies in [f_lo, f_hi). Throws std::invalid_argument
// when the band leaves [0, Nyquist].
double band_power(std::span<const double> window, double f_lo, double f_hi,
                  kernels::Exec exec = kernels::Exec::parallel);

BandPowers alpha_beta_power(std::span<const double> window,
                            kernels::Exec exec = kernels::Exec::parallel);

// attention = sum(beta) / (sum(alpha) + sum(beta)) over electrodes marked
// usable; relaxation is its exact complement. Returns nullopt when no
// electrode is usable or the aggregate power is zero (caller imputes).
std::optional<AttentionRelaxation> attention_relaxation(
    const std::array<BandPowers, kElectrodes>& powers,
    const std::array<bool, kElectrodes>& usable, std::uint64_t end_tick);

// Previous-value imputation; 0.5/0.5 neutral prior when no history exists.
AttentionRelaxation impute_previous(
    const std::optional<AttentionRelaxation>& history, std::uint64_t end_tick);

}  // namespace wf::eeg
