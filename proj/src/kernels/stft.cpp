#include "wf/kernels/stft.hpp"

#include <complex>
#include <cstdint>
#include <stdexcept>

#include "wf/kernels/fft.hpp"
#include "wf/kernels/spectrum.hpp"

namespace wf::kernels {

namespace {

void frame_magnitudes(std::span<const double> x, std::size_t offset,
                      std::span<const double> window, std::span<double> out) {
  const std::size_t n = window.size();
  std::vector<std::complex<double>> buf(n);
  for (std::size_t i = 0; i < n; ++i) {
    buf[i] = x[offset + i] * window[i];
  }
  fft_radix2(buf);
  for (std::size_t k = 0; k < out.size(); ++k) out[k] = std::abs(buf[k]);
}

}  // namespace

Spectrogram stft_magnitudes(std::span<const double> x, const StftSpec& spec,
                            Exec exec) {
  if (spec.frame_size == 0 || (spec.frame_size & (spec.frame_size - 1)) != 0) {
    throw std::invalid_argument("stft: frame_size must be a power of two");
  }
  if (spec.hop == 0) throw std::invalid_argument("stft: hop must be positive");

  Spectrogram sg;
  sg.bins = spec.frame_size / 2 + 1;
  if (x.size() < spec.frame_size) return sg;
  sg.frames = 1 + (x.size() - spec.frame_size) / spec.hop;
  sg.mag.resize(sg.frames * sg.bins);

  const std::vector<double> window = hann_window(spec.frame_size);
  const auto frames = static_cast<std::int64_t>(sg.frames);
  if (exec == Exec::parallel) {
#pragma omp parallel for schedule(static)
    for (std::int64_t f = 0; f < frames; ++f) {
      const auto uf = static_cast<std::size_t>(f);
      frame_magnitudes(x, uf * spec.hop, window,
                       std::span<double>(sg.mag.data() + uf * sg.bins, sg.bins));
    }
  } else {
    for (std::int64_t f = 0; f < frames; ++f) {
      const auto uf = static_cast<std::size_t>(f);
      frame_magnitudes(x, uf * spec.hop, window,
                       std::span<double>(sg.mag.data() + uf * sg.bins, sg.bins));
    }
  }
  return sg;
}

}  // namespace wf::kernels
