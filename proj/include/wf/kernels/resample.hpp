#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "wf/kernels/exec.hpp"

namespace wf::kernels {

// Streaming 64-tap Kaiser-windowed-sinc rate converter (downsampling only,
// in_rate >= out_rate). The filter is a fixed 32-input-sample delay line, so
// after consuming C input samples exactly round(C * out_rate / in_rate)
// output samples have been produced; per-call output counts follow the
// cumulative rounding and are gapless.
//
// Tap weights come from a 1024-phase table built at construction and each
// row is normalized to unit DC gain. Output samples are independent of one
// another, so the parallel path is bit-identical to the serial one.
class SincResampler {
 public:
  static constexpr int kTaps = 64;
  static constexpr int kHalf = kTaps / 2;
  static constexpr int kPhases = 1024;
  static constexpr double kKaiserBeta = 8.0;

  SincResampler(int in_rate, int out_rate, Exec exec = Exec::parallel);

  // Feed a block; returns the newly available output samples.
  std::vector<double> process(std::span<const double> in);

  std::uint64_t consumed() const { return consumed_; }
  std::uint64_t emitted() const { return emitted_; }
  double ratio() const { return ratio_; }

 private:
  double tap(int phase, int k) const { return taps_[phase * kTaps + k]; }

  int in_rate_;
  int out_rate_;
  double ratio_;
  Exec exec_;
  std::vector<double> taps_;  // kPhases rows of kTaps weights
  std::vector<double> buf_;   // input history, absolute index = buf_base_ + i
  std::uint64_t buf_base_ = 0;
  std::uint64_t consumed_ = 0;
  std::uint64_t emitted_ = 0;
};

// Zeroth-order modified Bessel function of the first kind (power series).
double bessel_i0(double x);

}  // namespace wf::kernels
