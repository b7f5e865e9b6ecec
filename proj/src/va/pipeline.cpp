#include "wf/va/pipeline.hpp"

#include <stdexcept>

namespace wf::va {

VaChannelPipeline::VaChannelPipeline(const Config& cfg, VaEstimator* estimator)
    : cfg_(cfg),
      estimator_(estimator),
      ring_(kWindowSamples, 0.0),
      next_emit_tick_(cfg.hop_samples) {
  if (cfg_.hop_samples == 0) {
    throw std::invalid_argument("va: hop_samples must be positive");
  }
  latest_.channel_id = cfg_.channel_id;
  latest_.imputed = true;
}

void VaChannelPipeline::consume(std::span<const double> samples) {
  for (double s : samples) {
    ring_[ring_pos_] = s;
    ring_pos_ = (ring_pos_ + 1) % kWindowSamples;
    ++ticks_seen_;
    if (ticks_seen_ == next_emit_tick_) {
      emit();
      next_emit_tick_ += cfg_.hop_samples;
    }
  }
}

void VaChannelPipeline::emit() {
  const bool padded = ticks_seen_ < kWindowSamples;

  if (cfg_.static_va) {
    VAPoint p;
    p.valence = clamp_unit(cfg_.static_va->first);
    p.arousal = clamp_unit(cfg_.static_va->second);
    p.channel_id = cfg_.channel_id;
    p.end_tick = ticks_seen_;
    p.padded = padded;
    latest_ = p;
    pending_.push_back(p);
    return;
  }

  // Unroll the ring into window order; zero head padding during warm-up.
  std::vector<double> window(kWindowSamples, 0.0);
  if (padded) {
    const std::size_t have = static_cast<std::size_t>(ticks_seen_);
    for (std::size_t i = 0; i < have; ++i) {
      window[kWindowSamples - have + i] = ring_[i];
    }
  } else {
    for (std::size_t i = 0; i < kWindowSamples; ++i) {
      window[i] = ring_[(ring_pos_ + i) % kWindowSamples];
    }
  }

  const VAPoint p =
      estimator_->estimate(window, cfg_.channel_id, ticks_seen_, padded);
  latest_ = p;
  pending_.push_back(p);
}

std::vector<VAPoint> VaChannelPipeline::drain() {
  std::vector<VAPoint> out;
  out.swap(pending_);
  return out;
}

}  // namespace wf::va
