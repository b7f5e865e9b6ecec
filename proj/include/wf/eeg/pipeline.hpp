#pragma once

#include <deque>
#include <optional>
#include <vector>

#include "wf/eeg/artifact.hpp"
#include "wf/eeg/features.hpp"
#include "wf/ingest/stream.hpp"
#include "wf/kernels/exec.hpp"

namespace wf::eeg {

// Sliding-window EEG stage: assembles 1000-sample windows on a configurable
// hop, classifies electrodes, and emits one AttentionRelaxation per hop
// (imputed when no usable electrode has power).
class EegPipeline {
 public:
  struct Config {
    std::size_t hop_samples = 500;
    ArtifactTracker::Config artifact;
    kernels::Exec exec = kernels::Exec::parallel;
  };

  EegPipeline() : EegPipeline(Config{}) {}
  explicit EegPipeline(const Config& cfg);

  void consume(const ingest::SampleBlock& block);

  // Emissions since the last drain, in tick order.
  std::vector<AttentionRelaxation> drain();

  const AttentionRelaxation& latest() const { return latest_; }
  EegStatus status() const { return tracker_.status(); }
  std::uint64_t windows_emitted() const { return windows_emitted_; }

 private:
  void emit_window();

  Config cfg_;
  ArtifactTracker tracker_;
  std::array<std::deque<double>, kElectrodes> ring_;
  std::uint64_t ticks_seen_ = 0;
  std::uint64_t next_emit_tick_ = kWindowSamples;
  std::uint64_t windows_emitted_ = 0;
  std::optional<AttentionRelaxation> history_;
  AttentionRelaxation latest_;  // starts at the neutral imputed prior
  std::vector<AttentionRelaxation> pending_;
};

}  // namespace wf::eeg
