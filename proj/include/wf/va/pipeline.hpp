#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "wf/va/estimator.hpp"

namespace wf::va {

// One audio channel: ring buffer of the trailing 5 s, one estimate per hop.
// Warm-up windows are head-padded with zeros and flagged. A static VA
// override short-circuits estimation for pre-profiled effect chains.
class VaChannelPipeline {
 public:
  struct Config {
    int channel_id = 0;
    std::size_t hop_samples = 30000;  // 1 s
    std::optional<std::pair<double, double>> static_va;  // (valence, arousal)
  };

  VaChannelPipeline(const Config& cfg, VaEstimator* estimator);

  void consume(std::span<const double> samples);

  std::vector<VAPoint> drain();
  const VAPoint& latest() const { return latest_; }

 private:
  void emit();

  Config cfg_;
  VaEstimator* estimator_;
  std::vector<double> ring_;
  std::size_t ring_pos_ = 0;
  std::uint64_t ticks_seen_ = 0;
  std::uint64_t next_emit_tick_;
  VAPoint latest_;  // neutral until the first hop
  std::vector<VAPoint> pending_;
};

}  // namespace wf::va
