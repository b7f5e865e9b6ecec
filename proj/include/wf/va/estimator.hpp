#pragma once

#include <memory>
#include <optional>
#include <span>
#include <string>

#include "wf/va/external.hpp"
#include "wf/va/features.hpp"

namespace wf::va {

enum class EstimatorMode {
  builtin,
  external,
};

// Per-channel estimator front end. The builtin path is pure; the external
// path speaks the wire protocol with a 200 ms deadline and degrades in
// order: timeout -> previous value (flagged imputed), dead or malformed
// response -> builtin.
class VaEstimator {
 public:
  VaEstimator(EstimatorMode mode, std::string endpoint,
              kernels::Exec exec = kernels::Exec::parallel);

  VAPoint estimate(std::span<const double> window, int channel_id,
                   std::uint64_t end_tick, bool padded);

  EstimatorMode mode() const { return mode_; }

 private:
  VAPoint fallback_previous(int channel_id, std::uint64_t end_tick,
                            bool padded);

  EstimatorMode mode_;
  kernels::Exec exec_;
  std::unique_ptr<ExternalVaClient> client_;
  std::optional<VAPoint> previous_;
};

}  // namespace wf::va
