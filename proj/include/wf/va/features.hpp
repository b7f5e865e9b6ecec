#pragma once

#include <cstdint>
#include <span>

#include "wf/kernels/exec.hpp"

namespace wf::va {

constexpr int kSampleRateHz = 30000;
constexpr std::size_t kWindowSamples = 150000;  // 5 s

struct VAPoint {
  double valence = 0.0;
  double arousal = 0.0;
  int channel_id = 0;  // 0 = dry, 1..n = FX
  std::uint64_t end_tick = 0;
  bool imputed = false;
  bool padded = false;  // head zero-padded warm-up window
};

// Sub-features behind the builtin estimator (exact mapping in the README):
//   energy      clamp((20*log10(max(rms,1e-6)) + 60) / 60, 0, 1)
//   flux        mean over frames of sum(max(0, |X_t|-|X_{t-1}|)) / sum|X_t|
//   centroid_hz magnitude-weighted mean frequency, averaged over frames
//   flatness    geometric/arithmetic mean ratio of the power spectrum
// STFT: 2048-point Hann frames, hop 512.
struct BuiltinFeatures {
  double rms = 0.0;
  double energy = 0.0;
  double flux = 0.0;
  double centroid_hz = 0.0;  // 0 when every frame is silent
  double flatness = 0.0;
  bool silent = true;
};

BuiltinFeatures builtin_features(std::span<const double> window,
                                 kernels::Exec exec = kernels::Exec::parallel);

// arousal = clamp(2*energy + 0.5*min(2*flux, 1) - 1, -1, 1)
// valence = clamp(2*c - 1 - 0.5*flatness, -1, 1) with
//   c = clamp(log2(centroid/200) / log2(8000/200), 0, 1), 0.5 when silent.
VAPoint builtin_heuristic(std::span<const double> window,
                          kernels::Exec exec = kernels::Exec::parallel);

double clamp_unit(double v);  // clamp to [-1, 1]

}  // namespace wf::va
