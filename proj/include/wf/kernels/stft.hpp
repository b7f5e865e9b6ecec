#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "wf/kernels/exec.hpp"

namespace wf::kernels {

struct StftSpec {
  std::size_t frame_size = 2048;  // power of two
  std::size_t hop = 512;
};

// Row-major matrix of per-frame magnitude spectra.
struct Spectrogram {
  std::size_t frames = 0;
  std::size_t bins = 0;  // frame_size / 2 + 1
  std::vector<double> mag;

  std::span<const double> row(std::size_t f) const {
    return std::span<const double>(mag.data() + f * bins, bins);
  }
};

// Hann-windowed magnitude STFT. Frames shorter than frame_size at the tail
// are dropped. The parallel variant computes whole frames per thread.
Spectrogram stft_magnitudes(std::span<const double> x, const StftSpec& spec,
                            Exec exec = Exec::parallel);

}  // namespace wf::kernels
