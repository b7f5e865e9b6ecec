#pragma once

#include <deque>
#include <optional>
#include <vector>

#include "wf/ecg/baevsky.hpp"
#include "wf/ecg/rpeak.hpp"
#include "wf/ingest/stream.hpp"

namespace wf::ecg {

// ECG stage: streaming R-peak detection feeding a trailing RR history, one
// StressIndex emission per 500 samples over the preceding 15 s, plus
// flatline tracking that deactivates the device after a persistent run.
class EcgPipeline {
 public:
  struct Config {
    BaevskyConfig baevsky;
    double cal_median = 150.0;
    double cal_spread = 1.0;
    std::size_t update_samples = 500;   // 0.5 s
    double history_ms = 15000.0;        // trailing RR window
    double theta_flat_uv = 10.0;        // per-update peak-to-peak floor
    int t_dead_updates = 12;            // 6 s of consecutive flat updates
  };

  EcgPipeline() : EcgPipeline(Config{}) {}
  explicit EcgPipeline(const Config& cfg);

  void consume(const ingest::SampleBlock& block);

  std::vector<StressIndex> drain();
  const StressIndex& latest() const { return latest_; }
  bool device_active() const { return flat_run_ < cfg_.t_dead_updates; }
  std::size_t plausible_intervals() const { return rr_.size(); }

  // All valid si_raw emissions so far (calibration support).
  const std::vector<double>& valid_si_history() const { return valid_si_; }

 private:
  void emit_update();

  struct RrEntry {
    double ms;
    std::uint64_t end_tick;
  };

  Config cfg_;
  RPeakDetector detector_;
  std::optional<std::uint64_t> last_peak_;
  std::deque<RrEntry> rr_;
  std::uint64_t ticks_seen_ = 0;
  std::uint64_t next_update_tick_;
  std::optional<StressIndex> history_;
  StressIndex latest_;
  std::vector<StressIndex> pending_;
  std::vector<double> valid_si_;

  // flatline tracking over the current update window
  double win_min_ = 0.0, win_max_ = 0.0;
  bool win_init_ = false;
  int flat_run_ = 0;
};

// Neutral prior used before any valid stress estimate exists.
StressIndex neutral_stress(double cal_median, double cal_spread,
                           std::uint64_t end_tick);

}  // namespace wf::ecg
