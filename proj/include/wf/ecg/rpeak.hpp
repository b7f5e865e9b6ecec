#pragma once

#include <cstdint>
#include <deque>
#include <span>
#include <vector>

namespace wf::ecg {

constexpr int kSampleRateHz = 1000;

// One direct-form-II-transposed biquad section (RBJ designs).
class Biquad {
 public:
  static Biquad lowpass(double fc_hz, double fs_hz);
  static Biquad highpass(double fc_hz, double fs_hz);

  double step(double x) {
    const double y = b0_ * x + z1_;
    z1_ = b1_ * x - a1_ * y + z2_;
    z2_ = b2_ * x - a2_ * y;
    return y;
  }

 private:
  double b0_ = 1, b1_ = 0, b2_ = 0, a1_ = 0, a2_ = 0;
  double z1_ = 0, z2_ = 0;
};

// Streaming QRS detector: 5-15 Hz band-pass, five-point derivative,
// squaring, 150 ms moving-window integration, adaptive signal/noise peak
// thresholds, 250 ms refractory. Emits strictly increasing peak ticks; the
// reported tick is the band-passed amplitude maximum near the integrator
// peak. The first second is a learning phase with no emissions.
class RPeakDetector {
 public:
  struct Config {
    double refractory_ms = 250.0;
    double integration_ms = 150.0;
    double warmup_ms = 1000.0;
  };

  RPeakDetector() : RPeakDetector(Config{}) {}
  explicit RPeakDetector(const Config& cfg);

  // Feed samples (microvolts); returns peak ticks detected within them.
  std::vector<std::uint64_t> process(std::span<const double> samples);

  std::uint64_t ticks_seen() const { return tick_; }

 private:
  void step(double x, std::vector<std::uint64_t>& out);
  void on_candidate(double value, std::uint64_t tick,
                    std::vector<std::uint64_t>& out);

  Config cfg_;
  Biquad hp_;
  Biquad lp_;
  double y_hist_[4] = {0, 0, 0, 0};  // derivative delay line

  std::size_t mwi_len_;
  std::deque<double> mwi_ring_;
  double mwi_sum_ = 0.0;
  double mwi_prev2_ = 0.0, mwi_prev1_ = 0.0;

  std::deque<double> bp_ring_;  // |band-passed|, for tick refinement
  static constexpr std::size_t kBpRing = 512;

  double spk_ = 0.0;
  double npk_ = 0.0;
  std::uint64_t tick_ = 0;
  std::int64_t last_peak_tick_ = -1;
};

}  // namespace wf::ecg
