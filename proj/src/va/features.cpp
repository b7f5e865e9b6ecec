#include "wf/va/features.hpp"

#include <algorithm>
#include <cmath>

#include "wf/kernels/stft.hpp"

namespace wf::va {

namespace {

constexpr double kRmsFloor = 1e-6;
constexpr double kDbRange = 60.0;
constexpr double kFluxScale = 2.0;
constexpr double kCentroidLoHz = 200.0;
constexpr double kCentroidHiHz = 8000.0;
constexpr double kSilenceMag = 1e-9;
constexpr double kEps = 1e-12;

}  // namespace

double clamp_unit(double v) { return std::clamp(v, -1.0, 1.0); }

BuiltinFeatures builtin_features(std::span<const double> window,
                                 kernels::Exec exec) {
  BuiltinFeatures f;

  double sq = 0.0;
  for (double s : window) sq += s * s;
  f.rms = window.empty() ? 0.0 : std::sqrt(sq / static_cast<double>(window.size()));
  const double rms_db = 20.0 * std::log10(std::max(f.rms, kRmsFloor));
  f.energy = std::clamp((rms_db + kDbRange) / kDbRange, 0.0, 1.0);

  const kernels::Spectrogram sg =
      kernels::stft_magnitudes(window, kernels::StftSpec{}, exec);

  double flux_sum = 0.0;
  std::size_t flux_frames = 0;
  double centroid_sum = 0.0;
  double flatness_sum = 0.0;
  std::size_t live_frames = 0;
  const double bin_hz = static_cast<double>(kSampleRateHz) / 2048.0;

  for (std::size_t t = 0; t < sg.frames; ++t) {
    const auto row = sg.row(t);
    double total = 0.0;
    double weighted = 0.0;
    double log_acc = 0.0;
    double pow_acc = 0.0;
    for (std::size_t k = 1; k < sg.bins; ++k) {
      total += row[k];
      weighted += static_cast<double>(k) * bin_hz * row[k];
      const double p = row[k] * row[k];
      log_acc += std::log(p + kEps);
      pow_acc += p;
    }
    if (total > kSilenceMag) {
      centroid_sum += weighted / total;
      const double bins = static_cast<double>(sg.bins - 1);
      flatness_sum += std::exp(log_acc / bins) / (pow_acc / bins + kEps);
      ++live_frames;
    }
    if (t > 0) {
      const auto prev = sg.row(t - 1);
      double inc = 0.0;
      for (std::size_t k = 1; k < sg.bins; ++k) {
        inc += std::max(0.0, row[k] - prev[k]);
      }
      flux_sum += inc / (total + kEps);
      ++flux_frames;
    }
  }

  f.flux = flux_frames > 0 ? flux_sum / static_cast<double>(flux_frames) : 0.0;
  f.silent = live_frames == 0;
  if (!f.silent) {
    f.centroid_hz = centroid_sum / static_cast<double>(live_frames);
    f.flatness = flatness_sum / static_cast<double>(live_frames);
  }
  return f;
}

VAPoint builtin_heuristic(std::span<const double> window, kernels::Exec exec) {
  const BuiltinFeatures f = builtin_features(window, exec);

  const double flux_term = std::min(kFluxScale * f.flux, 1.0);
  VAPoint p;
  p.arousal = clamp_unit(2.0 * f.energy + 0.5 * flux_term - 1.0);

  double c = 0.5;
  if (!f.silent) {
    c = std::clamp(std::log2(std::max(f.centroid_hz, 1.0) / kCentroidLoHz) /
                       std::log2(kCentroidHiHz / kCentroidLoHz),
                   0.0, 1.0);
  }
  p.valence = clamp_unit(2.0 * c - 1.0 - 0.5 * f.flatness);
  return p;
}

}  // namespace wf::va
