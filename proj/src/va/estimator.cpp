#include "wf/va/estimator.hpp"

#include <stdexcept>

namespace wf::va {

VaEstimator::VaEstimator(EstimatorMode mode, std::string endpoint,
                         kernels::Exec exec)
    : mode_(mode), exec_(exec) {
  if (mode_ == EstimatorMode::external) {
    client_ = std::make_unique<ExternalVaClient>(std::move(endpoint));
  }
}

VAPoint VaEstimator::fallback_previous(int channel_id, std::uint64_t end_tick,
                                       bool padded) {
  VAPoint p;  // neutral when no history
  if (previous_) p = *previous_;
  p.channel_id = channel_id;
  p.end_tick = end_tick;
  p.imputed = true;
  p.padded = padded;
  return p;
}

VAPoint VaEstimator::estimate(std::span<const double> window, int channel_id,
                              std::uint64_t end_tick, bool padded) {
  if (window.size() != kWindowSamples) {
    throw std::invalid_argument("estimate_va: window must be 150000 samples");
  }

  VAPoint p;
  if (mode_ == EstimatorMode::external) {
    float v = 0.0f, a = 0.0f;
    switch (client_->estimate(channel_id, window, v, a)) {
      case ExternalVaClient::Result::ok:
        p.valence = clamp_unit(v);
        p.arousal = clamp_unit(a);
        break;
      case ExternalVaClient::Result::timeout:
        return fallback_previous(channel_id, end_tick, padded);
      case ExternalVaClient::Result::dead:
      case ExternalVaClient::Result::malformed:
        p = builtin_heuristic(window, exec_);
        break;
    }
  } else {
    p = builtin_heuristic(window, exec_);
  }

  p.channel_id = channel_id;
  p.end_tick = end_tick;
  p.imputed = false;
  p.padded = padded;
  previous_ = p;
  return p;
}

}  // namespace wf::va
