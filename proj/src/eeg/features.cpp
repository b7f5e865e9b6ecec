#include "wf/eeg/features.hpp"

#include <cmath>
#include <stdexcept>

#include "wf/kernels/spectrum.hpp"

namespace wf::eeg {

double band_power(std::span<const double> window, double f_lo, double f_hi,
                  kernels::Exec exec) {
  const double nyquist = kSampleRateHz / 2.0;
  if (!(0.0 <= f_lo && f_lo < f_hi && f_hi <= nyquist)) {
    throw std::invalid_argument("band_power: band outside [0, Nyquist]");
  }
  const std::size_t n = window.size();
  const double df = static_cast<double>(kSampleRateHz) / static_cast<double>(n);
  // First bin with center >= f_lo, first bin with center >= f_hi.
  const auto k_lo = static_cast<std::size_t>(std::ceil(f_lo / df - 1e-9));
  const auto k_hi = static_cast<std::size_t>(std::ceil(f_hi / df - 1e-9));
  if (k_hi <= k_lo) return 0.0;

  std::vector<double> frame(window.begin(), window.end());
  kernels::apply_hann(frame);
  std::vector<double> bins(k_hi - k_lo);
  kernels::power_spectrum_bins(frame, k_lo, k_hi, bins, exec);
  double sum = 0.0;
  for (double p : bins) sum += p;
  return sum;
}

BandPowers alpha_beta_power(std::span<const double> window,
                            kernels::Exec exec) {
  BandPowers out;
  out.alpha = band_power(window, kAlphaLoHz, kAlphaHiHz, exec);
  out.beta = band_power(window, kBetaLoHz, kBetaHiHz, exec);
  return out;
}

std::optional<AttentionRelaxation> attention_relaxation(
    const std::array<BandPowers, kElectrodes>& powers,
    const std::array<bool, kElectrodes>& usable, std::uint64_t end_tick) {
  double alpha = 0.0;
  double beta = 0.0;
  bool any = false;
  for (int e = 0; e < kElectrodes; ++e) {
    if (!usable[static_cast<std::size_t>(e)]) continue;
    any = true;
    alpha += powers[static_cast<std::size_t>(e)].alpha;
    beta += powers[static_cast<std::size_t>(e)].beta;
  }
  if (!any || alpha + beta <= 0.0) return std::nullopt;

  AttentionRelaxation out;
  out.attention = beta / (alpha + beta);
  out.relaxation = 1.0 - out.attention;
  out.valid = true;
  out.imputed = false;
  out.end_tick = end_tick;
  return out;
}

AttentionRelaxation impute_previous(
    const std::optional<AttentionRelaxation>& history,
    std::uint64_t end_tick) {
  AttentionRelaxation out;
  if (history) {
    out.attention = history->attention;
    out.relaxation = history->relaxation;
  }
  out.valid = false;
  out.imputed = true;
  out.end_tick = end_tick;
  return out;
}

}  // namespace wf::eeg
