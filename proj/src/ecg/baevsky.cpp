#include "wf/ecg/baevsky.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace wf::ecg {

std::optional<double> baevsky_si(std::span<const double> rr_ms,
                                 const BaevskyConfig& cfg) {
  if (static_cast<int>(rr_ms.size()) < cfg.min_intervals) return std::nullopt;

  double rr_min = rr_ms[0];
  double rr_max = rr_ms[0];
  std::vector<int> counts;
  for (double rr : rr_ms) {
    rr_min = std::min(rr_min, rr);
    rr_max = std::max(rr_max, rr);
    const auto bin =
        static_cast<std::size_t>(std::floor((rr - cfg.origin_ms) / cfg.bin_ms));
    if (bin >= counts.size()) counts.resize(bin + 1, 0);
    ++counts[bin];
  }

  // Mode: highest count, lowest bin on ties.
  std::size_t mode_bin = 0;
  for (std::size_t b = 1; b < counts.size(); ++b) {
    if (counts[b] > counts[mode_bin]) mode_bin = b;
  }

  const double amo_percent = 100.0 * static_cast<double>(counts[mode_bin]) /
                             static_cast<double>(rr_ms.size());
  const double mo_s =
      (cfg.origin_ms + (static_cast<double>(mode_bin) + 0.5) * cfg.bin_ms) /
      1000.0;
  const double mxdmn_s = std::max((rr_max - rr_min) / 1000.0, cfg.mxdmn_floor_s);
  return amo_percent / (2.0 * mo_s * mxdmn_s);
}

double normalize_si(double si_raw, double median, double spread) {
  const double z = (std::log(si_raw) - std::log(median)) / spread;
  return 1.0 / (1.0 + std::exp(-z));
}

}  // namespace wf::ecg
