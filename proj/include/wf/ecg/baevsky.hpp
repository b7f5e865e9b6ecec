#pragma once

#include <cstdint>
#include <optional>
#include <span>

namespace wf::ecg {

// Physiological plausibility gate for RR intervals.
constexpr double kRrMinMs = 300.0;
constexpr double kRrMaxMs = 2000.0;

struct BaevskyConfig {
  double bin_ms = 50.0;         // histogram bin width
  double origin_ms = 300.0;     // bins aligned to multiples from here
  double mxdmn_floor_s = 0.016;  // range clamp for degenerate series
  int min_intervals = 5;
};

// Baevsky stress index over a window of plausible RR intervals (ms):
//   SI = AMo / (2 * Mo * MxDMn)
// AMo  percentage of intervals in the modal bin,
// Mo   modal bin center in seconds (ties break to the lowest bin),
// MxDMn max - min in seconds, clamped to mxdmn_floor_s.
// Returns nullopt when fewer than min_intervals intervals are given.
std::optional<double> baevsky_si(std::span<const double> rr_ms,
                                 const BaevskyConfig& cfg = {});

// si_norm = logistic((ln si - ln median) / spread); monotone in si.
double normalize_si(double si_raw, double median, double spread);

struct StressIndex {
  double si_raw = 0.0;
  double si_norm = 0.25;
  bool valid = false;
  bool imputed = true;
  std::uint64_t end_tick = 0;
};

}  // namespace wf::ecg
