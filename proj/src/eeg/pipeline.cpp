#include "wf/eeg/pipeline.hpp"

#include <stdexcept>

namespace wf::eeg {

EegPipeline::EegPipeline(const Config& cfg)
    : cfg_(cfg), tracker_(cfg.artifact) {
  if (cfg_.hop_samples == 0) {
    throw std::invalid_argument("eeg: hop_samples must be positive");
  }
}

void EegPipeline::consume(const ingest::SampleBlock& block) {
  if (block.channel_count != kElectrodes) {
    throw std::invalid_argument("eeg: expected 4 electrode channels");
  }
  for (std::size_t i = 0; i < block.frames; ++i) {
    for (int e = 0; e < kElectrodes; ++e) {
      auto& ring = ring_[static_cast<std::size_t>(e)];
      ring.push_back(block.channel(e)[i]);
      if (ring.size() > kWindowSamples) ring.pop_front();
    }
    ++ticks_seen_;
    if (ticks_seen_ == next_emit_tick_) {
      emit_window();
      next_emit_tick_ += cfg_.hop_samples;
    }
  }
}

void EegPipeline::emit_window() {
  EegWindow window;
  window.end_tick = ticks_seen_;
  for (int e = 0; e < kElectrodes; ++e) {
    auto& ring = ring_[static_cast<std::size_t>(e)];
    window.samples[static_cast<std::size_t>(e)].assign(ring.begin(), ring.end());
  }
  const EegStatus status = tracker_.update(window);

  std::array<BandPowers, kElectrodes> powers{};
  const auto usable = status.usable();
  for (int e = 0; e < kElectrodes; ++e) {
    if (!usable[static_cast<std::size_t>(e)]) continue;
    powers[static_cast<std::size_t>(e)] = alpha_beta_power(
        window.samples[static_cast<std::size_t>(e)], cfg_.exec);
  }

  auto result = attention_relaxation(powers, usable, window.end_tick);
  AttentionRelaxation emitted =
      result ? *result : impute_previous(history_, window.end_tick);
  if (result) history_ = emitted;
  latest_ = emitted;
  pending_.push_back(emitted);
  ++windows_emitted_;
}

std::vector<AttentionRelaxation> EegPipeline::drain() {
  std::vector<AttentionRelaxation> out;
  out.swap(pending_);
  return out;
}

}  // namespace wf::eeg
