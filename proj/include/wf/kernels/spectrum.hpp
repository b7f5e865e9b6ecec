#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "wf/kernels/exec.hpp"

namespace wf::kernels {

// Symmetric Hann window, w[n] = 0.5 * (1 - cos(2*pi*n / (N-1))).
std::vector<double> hann_window(std::size_t n);

// In-place multiply by the symmetric Hann window.
void apply_hann(std::span<double> frame);

// Periodogram power |X_k|^2 of a real frame for DFT bins k in
// [bin_begin, bin_end), evaluated by direct summation with a per-bin phase
// recurrence. out.size() must equal bin_end - bin_begin. The parallel
// variant splits bins across threads; each bin is computed by a single
// thread with the serial arithmetic order.
void power_spectrum_bins(std::span<const double> frame, std::size_t bin_begin,
                         std::size_t bin_end, std::span<double> out,
                         Exec exec = Exec::parallel);

// Convenience: full one-sided power spectrum, bins 0 .. N/2.
std::vector<double> power_spectrum(std::span<const double> frame,
                                   Exec exec = Exec::parallel);

}  // namespace wf::kernels
