#pragma once

#include <span>
#include <vector>

namespace wf::mix {

// Per-channel one-pole smoother: g += (1 - e^{-dt/tau}) * (target - g).
// The first step snaps to the target so sessions do not fade in from zero.
class GainSmoother {
 public:
  explicit GainSmoother(double tau_s = 0.25) : tau_s_(tau_s) {}

  std::vector<double> step(std::span<const double> target, double dt_s);

  const std::vector<double>& state() const { return state_; }
  void reset() { state_.clear(); }

 private:
  double tau_s_;
  std::vector<double> state_;
};

}  // namespace wf::mix
