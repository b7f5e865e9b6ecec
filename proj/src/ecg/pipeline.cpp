#include "wf/ecg/pipeline.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace wf::ecg {

StressIndex neutral_stress(double cal_median, double cal_spread,
                           std::uint64_t end_tick) {
  StressIndex out;
  out.si_norm = 0.25;
  // logistic inverse of 0.25 is -ln(3)
  out.si_raw = cal_median * std::exp(-cal_spread * std::log(3.0));
  out.valid = false;
  out.imputed = true;
  out.end_tick = end_tick;
  return out;
}

EcgPipeline::EcgPipeline(const Config& cfg)
    : cfg_(cfg), next_update_tick_(cfg.update_samples) {
  if (cfg_.update_samples == 0) {
    throw std::invalid_argument("ecg: update_samples must be positive");
  }
  latest_ = neutral_stress(cfg_.cal_median, cfg_.cal_spread, 0);
}

void EcgPipeline::consume(const ingest::SampleBlock& block) {
  const auto samples = block.channel(0);
  std::size_t offset = 0;
  while (offset < block.frames) {
    const std::size_t room =
        static_cast<std::size_t>(next_update_tick_ - ticks_seen_);
    const std::size_t take = std::min(block.frames - offset, room);
    const auto chunk = samples.subspan(offset, take);

    for (double s : chunk) {
      if (!win_init_) {
        win_min_ = win_max_ = s;
        win_init_ = true;
      } else {
        win_min_ = std::min(win_min_, s);
        win_max_ = std::max(win_max_, s);
      }
    }

    for (std::uint64_t peak : detector_.process(chunk)) {
      if (last_peak_) {
        const double rr_ms = static_cast<double>(peak - *last_peak_) *
                             1000.0 / kSampleRateHz;
        if (rr_ms >= kRrMinMs && rr_ms <= kRrMaxMs) {
          rr_.push_back({rr_ms, peak});
        }
      }
      last_peak_ = peak;
    }

    ticks_seen_ += take;
    offset += take;
    if (ticks_seen_ == next_update_tick_) {
      emit_update();
      next_update_tick_ += cfg_.update_samples;
    }
  }
}

void EcgPipeline::emit_update() {
  const std::uint64_t now = ticks_seen_;
  const double horizon_ticks = cfg_.history_ms / 1000.0 * kSampleRateHz;
  while (!rr_.empty() &&
         static_cast<double>(now - rr_.front().end_tick) >= horizon_ticks) {
    rr_.pop_front();
  }

  std::vector<double> intervals;
  intervals.reserve(rr_.size());
  for (const auto& e : rr_) intervals.push_back(e.ms);

  StressIndex emitted;
  if (auto si = baevsky_si(intervals, cfg_.baevsky)) {
    emitted.si_raw = *si;
    emitted.si_norm = normalize_si(*si, cfg_.cal_median, cfg_.cal_spread);
    emitted.valid = true;
    emitted.imputed = false;
    emitted.end_tick = now;
    history_ = emitted;
    valid_si_.push_back(*si);
  } else if (history_) {
    emitted = *history_;
    emitted.valid = false;
    emitted.imputed = true;
    emitted.end_tick = now;
  } else {
    emitted = neutral_stress(cfg_.cal_median, cfg_.cal_spread, now);
  }
  latest_ = emitted;
  pending_.push_back(emitted);

  const double ptp = win_init_ ? win_max_ - win_min_ : 0.0;
  if (ptp < cfg_.theta_flat_uv) {
    ++flat_run_;
  } else {
    flat_run_ = 0;
  }
  win_init_ = false;
}

std::vector<StressIndex> EcgPipeline::drain() {
  std::vector<StressIndex> out;
  out.swap(pending_);
  return out;
}

}  // namespace wf::ecg
