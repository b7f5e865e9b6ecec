#include "wf/kernels/resample.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace wf::kernels {

double bessel_i0(double x) {
  const double half = x / 2.0;
  double term = 1.0;
  double sum = 1.0;
  for (int k = 1; k < 64; ++k) {
    term *= (half / k) * (half / k);
    sum += term;
    if (term < 1e-18 * sum) break;
  }
  return sum;
}

namespace {

double sinc(double x) {
  if (x == 0.0) return 1.0;
  const double px = std::numbers::pi * x;
  return std::sin(px) / px;
}

}  // namespace

SincResampler::SincResampler(int in_rate, int out_rate, Exec exec)
    : in_rate_(in_rate),
      out_rate_(out_rate),
      ratio_(static_cast<double>(out_rate) / static_cast<double>(in_rate)),
      exec_(exec) {
  if (in_rate <= 0 || out_rate <= 0) {
    throw std::invalid_argument("SincResampler: rates must be positive");
  }
  if (in_rate < out_rate) {
    throw std::invalid_argument("SincResampler: upsampling unsupported");
  }
  if (in_rate == out_rate) return;  // identity bypass, no table needed

  taps_.resize(static_cast<std::size_t>(kPhases) * kTaps);
  const double i0_beta = bessel_i0(kKaiserBeta);
  for (int p = 0; p < kPhases; ++p) {
    const double frac = static_cast<double>(p) / kPhases;
    double sum = 0.0;
    for (int k = 0; k < kTaps; ++k) {
      const double t = frac - static_cast<double>(k) + (kHalf - 1);
      const double u = t / kHalf;
      double w = 0.0;
      if (u >= -1.0 && u <= 1.0) {
        w = bessel_i0(kKaiserBeta * std::sqrt(1.0 - u * u)) / i0_beta;
      }
      const double h = ratio_ * sinc(ratio_ * t) * w;
      taps_[static_cast<std::size_t>(p) * kTaps + k] = h;
      sum += h;
    }
    for (int k = 0; k < kTaps; ++k) {
      taps_[static_cast<std::size_t>(p) * kTaps + k] /= sum;
    }
  }
}

std::vector<double> SincResampler::process(std::span<const double> in) {
  if (in_rate_ == out_rate_) {
    consumed_ += in.size();
    emitted_ += in.size();
    return std::vector<double>(in.begin(), in.end());
  }

  buf_.insert(buf_.end(), in.begin(), in.end());
  consumed_ += in.size();

  const auto target = static_cast<std::uint64_t>(
      std::llround(static_cast<double>(consumed_) * ratio_));
  std::vector<double> out(target - emitted_);
  const auto first = static_cast<std::int64_t>(emitted_);
  const auto count = static_cast<std::int64_t>(out.size());

  auto render = [&](std::int64_t idx) {
    const std::uint64_t j = static_cast<std::uint64_t>(first + idx);
    const double pos = static_cast<double>(j) * in_rate_ / out_rate_ - kHalf;
    double ip = 0.0;
    double frac = std::modf(pos, &ip);
    auto i0 = static_cast<std::int64_t>(ip);
    if (frac < 0.0) {  // leading edge, pos may be negative
      frac += 1.0;
      i0 -= 1;
    }
    int phase = static_cast<int>(std::lround(frac * kPhases));
    if (phase == kPhases) {
      phase = 0;
      i0 += 1;
    }
    double acc = 0.0;
    for (int k = 0; k < kTaps; ++k) {
      const std::int64_t sample_idx = i0 + k - (kHalf - 1);
      double x = 0.0;
      if (sample_idx >= 0) {
        const auto rel =
            static_cast<std::uint64_t>(sample_idx) - buf_base_;
        if (rel < buf_.size()) x = buf_[rel];
      }
      acc += tap(phase, k) * x;
    }
    out[static_cast<std::size_t>(idx)] = acc;
  };

  if (exec_ == Exec::parallel) {
#pragma omp parallel for schedule(static)
    for (std::int64_t idx = 0; idx < count; ++idx) render(idx);
  } else {
    for (std::int64_t idx = 0; idx < count; ++idx) render(idx);
  }
  emitted_ = target;

  // Drop history no future output can reach.
  const double next_pos =
      static_cast<double>(emitted_) * in_rate_ / out_rate_ - kHalf;
  const auto keep_from = static_cast<std::int64_t>(std::floor(next_pos)) -
                         static_cast<std::int64_t>(kHalf) - 4;
  if (keep_from > static_cast<std::int64_t>(buf_base_)) {
    const auto drop =
        static_cast<std::size_t>(keep_from - static_cast<std::int64_t>(buf_base_));
    if (drop < buf_.size()) {
      buf_.erase(buf_.begin(), buf_.begin() + static_cast<std::ptrdiff_t>(drop));
      buf_base_ = static_cast<std::uint64_t>(keep_from);
    }
  }
  return out;
}

}  // namespace wf::kernels
