#include "wf/ecg/rpeak.hpp"

#include <cmath>
#include <numbers>

namespace wf::ecg {

namespace {
constexpr double kButterworthQ = 0.7071067811865476;
}

Biquad Biquad::lowpass(double fc_hz, double fs_hz) {
  const double w0 = 2.0 * std::numbers::pi * fc_hz / fs_hz;
  const double alpha = std::sin(w0) / (2.0 * kButterworthQ);
  const double c = std::cos(w0);
  const double a0 = 1.0 + alpha;
  Biquad b;
  b.b0_ = (1.0 - c) / 2.0 / a0;
  b.b1_ = (1.0 - c) / a0;
  b.b2_ = b.b0_;
  b.a1_ = -2.0 * c / a0;
  b.a2_ = (1.0 - alpha) / a0;
  return b;
}

Biquad Biquad::highpass(double fc_hz, double fs_hz) {
  const double w0 = 2.0 * std::numbers::pi * fc_hz / fs_hz;
  const double alpha = std::sin(w0) / (2.0 * kButterworthQ);
  const double c = std::cos(w0);
  const double a0 = 1.0 + alpha;
  Biquad b;
  b.b0_ = (1.0 + c) / 2.0 / a0;
  b.b1_ = -(1.0 + c) / a0;
  b.b2_ = b.b0_;
  b.a1_ = -2.0 * c / a0;
  b.a2_ = (1.0 - alpha) / a0;
  return b;
}

RPeakDetector::RPeakDetector(const Config& cfg)
    : cfg_(cfg),
      hp_(Biquad::highpass(5.0, kSampleRateHz)),
      lp_(Biquad::lowpass(15.0, kSampleRateHz)),
      mwi_len_(static_cast<std::size_t>(cfg.integration_ms / 1000.0 *
                                        kSampleRateHz)) {}

std::vector<std::uint64_t> RPeakDetector::process(
    std::span<const double> samples) {
  std::vector<std::uint64_t> out;
  for (double x : samples) step(x, out);
  return out;
}

void RPeakDetector::step(double x, std::vector<std::uint64_t>& out) {
  const double bp = lp_.step(hp_.step(x));

  bp_ring_.push_back(std::abs(bp));
  if (bp_ring_.size() > kBpRing) bp_ring_.pop_front();

  const double deriv =
      (2.0 * bp + y_hist_[0] - y_hist_[2] - 2.0 * y_hist_[3]) / 8.0;
  y_hist_[3] = y_hist_[2];
  y_hist_[2] = y_hist_[1];
  y_hist_[1] = y_hist_[0];
  y_hist_[0] = bp;

  const double sq = deriv * deriv;
  mwi_ring_.push_back(sq);
  mwi_sum_ += sq;
  if (mwi_ring_.size() > mwi_len_) {
    mwi_sum_ -= mwi_ring_.front();
    mwi_ring_.pop_front();
  }
  const double mwi = mwi_sum_ / static_cast<double>(mwi_len_);

  // Local maximum of the integrated signal one sample back.
  if (tick_ >= 2 && mwi_prev1_ > mwi_prev2_ && mwi_prev1_ >= mwi &&
      mwi_prev1_ > 0.0) {
    on_candidate(mwi_prev1_, tick_ - 1, out);
  }
  mwi_prev2_ = mwi_prev1_;
  mwi_prev1_ = mwi;
  ++tick_;
}

void RPeakDetector::on_candidate(double value, std::uint64_t tick,
                                 std::vector<std::uint64_t>& out) {
  const double threshold = npk_ + 0.25 * (spk_ - npk_);
  if (value <= threshold) {
    npk_ = 0.125 * value + 0.875 * npk_;
    return;
  }

  // Refine to the band-passed amplitude peak in the trailing 200 ms.
  const std::uint64_t lookback = 200;
  std::uint64_t best_tick = tick;
  double best = -1.0;
  const std::uint64_t ring_start = tick_ + 1 - bp_ring_.size();
  const std::uint64_t from = tick > lookback ? tick - lookback : 0;
  for (std::uint64_t t = std::max(from, ring_start); t <= tick; ++t) {
    const double v = bp_ring_[static_cast<std::size_t>(t - ring_start)];
    if (v > best) {
      best = v;
      best_tick = t;
    }
  }

  const auto refractory =
      static_cast<std::int64_t>(cfg_.refractory_ms / 1000.0 * kSampleRateHz);
  const bool in_refractory =
      last_peak_tick_ >= 0 &&
      static_cast<std::int64_t>(best_tick) - last_peak_tick_ < refractory;
  const bool warming =
      tick < static_cast<std::uint64_t>(cfg_.warmup_ms / 1000.0 * kSampleRateHz);

  if (in_refractory) {
    npk_ = 0.125 * value + 0.875 * npk_;
    return;
  }
  spk_ = 0.125 * value + 0.875 * spk_;
  if (warming) return;
  if (last_peak_tick_ >= 0 &&
      static_cast<std::int64_t>(best_tick) <= last_peak_tick_) {
    return;  // refinement collided with the previous peak
  }
  last_peak_tick_ = static_cast<std::int64_t>(best_tick);
  out.push_back(best_tick);
}

}  // namespace wf::ecg
