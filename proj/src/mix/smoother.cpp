#include "wf/mix/smoother.hpp"

#include <cmath>
#include <stdexcept>

namespace wf::mix {

std::vector<double> GainSmoother::step(std::span<const double> target,
                                       double dt_s) {
  if (state_.empty()) {
    state_.assign(target.begin(), target.end());
    return state_;
  }
  if (state_.size() != target.size()) {
    throw std::invalid_argument("smoother: length changed mid-session");
  }
  const double k = tau_s_ > 0.0 ? 1.0 - std::exp(-dt_s / tau_s_) : 1.0;
  for (std::size_t i = 0; i < state_.size(); ++i) {
    state_[i] += k * (target[i] - state_[i]);
  }
  return state_;
}

}  // namespace wf::mix
