#include "wf/kernels/spectrum.hpp"

#include <cmath>
#include <cstdint>
#include <numbers>
#include <stdexcept>

namespace wf::kernels {

std::vector<double> hann_window(std::size_t n) {
  std::vector<double> w(n, 1.0);
  if (n < 2) return w;
  const double step = 2.0 * std::numbers::pi / static_cast<double>(n - 1);
  for (std::size_t i = 0; i < n; ++i) {
    w[i] = 0.5 * (1.0 - std::cos(step * static_cast<double>(i)));
  }
  return w;
}

void apply_hann(std::span<double> frame) {
  const std::size_t n = frame.size();
  if (n < 2) return;
  const double step = 2.0 * std::numbers::pi / static_cast<double>(n - 1);
  for (std::size_t i = 0; i < n; ++i) {
    frame[i] *= 0.5 * (1.0 - std::cos(step * static_cast<double>(i)));
  }
}

namespace {

// One bin of the direct DFT, phase advanced by complex rotation.
double bin_power(std::span<const double> frame, std::size_t k) {
  const std::size_t n = frame.size();
  const double w = 2.0 * std::numbers::pi * static_cast<double>(k) /
                   static_cast<double>(n);
  const double cs = std::cos(w);
  const double sn = std::sin(w);
  double cr = 1.0, ci = 0.0;  // e^{-i w t}, t = 0
  double re = 0.0, im = 0.0;
  for (std::size_t t = 0; t < n; ++t) {
    re += frame[t] * cr;
    im += frame[t] * ci;
    const double ncr = cr * cs + ci * sn;
    const double nci = ci * cs - cr * sn;
    cr = ncr;
    ci = nci;
  }
  return re * re + im * im;
}

}  // namespace

void power_spectrum_bins(std::span<const double> frame, std::size_t bin_begin,
                         std::size_t bin_end, std::span<double> out,
                         Exec exec) {
  if (bin_end < bin_begin || out.size() != bin_end - bin_begin) {
    throw std::invalid_argument("power_spectrum_bins: bad bin range");
  }
  const auto count = static_cast<std::int64_t>(bin_end - bin_begin);
  if (exec == Exec::parallel) {
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < count; ++i) {
      out[static_cast<std::size_t>(i)] =
          bin_power(frame, bin_begin + static_cast<std::size_t>(i));
    }
  } else {
    for (std::int64_t i = 0; i < count; ++i) {
      out[static_cast<std::size_t>(i)] =
          bin_power(frame, bin_begin + static_cast<std::size_t>(i));
    }
  }
}

std::vector<double> power_spectrum(std::span<const double> frame, Exec exec) {
  std::vector<double> out(frame.size() / 2 + 1);
  power_spectrum_bins(frame, 0, out.size(), out, exec);
  return out;
}

}  // namespace wf::kernels
