#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace wf::kernels {

// In-place radix-2 forward DFT (negative exponent). a.size() must be a
// power of two.
void fft_radix2(std::span<std::complex<double>> a);

// One-sided magnitude spectrum |X_k| of a real frame, k = 0 .. N/2.
// frame.size() must be a power of two.
std::vector<double> magnitude_spectrum(std::span<const double> frame);

}  // namespace wf::kernels
