#pragma once

#include <memory>
#include <string>
#include <vector>

#include "wf/ecg/pipeline.hpp"
#include "wf/eeg/pipeline.hpp"
#include "wf/ingest/sources.hpp"
#include "wf/mix/controller.hpp"
#include "wf/mix/osc.hpp"
#include "wf/session/config.hpp"
#include "wf/session/event.hpp"
#include "wf/va/pipeline.hpp"

namespace wf::session {

// Wires ingest -> features -> rules -> mix on a virtual 50 ms block clock
// with a decision tick every mix.tick_ms. File and synthetic sources are
// pumped in lockstep, which is what makes offline runs bit-reproducible;
// socket sources are paced by their producers. The run stops at the first
// end-of-stream.
class Engine {
 public:
  Engine(const Config& cfg, std::vector<rules::Ruleset> rulesets);
  ~Engine();

  struct RunStats {
    std::uint64_t blocks = 0;
    std::uint64_t decision_ticks = 0;
  };

  RunStats run(JsonlWriter* log, mix::MidiSink* midi = nullptr,
               mix::OscSender* osc = nullptr);

  // Asks the run loop to finish after the current block (signal-safe).
  void request_stop() { stop_requested_.store(true); }

  const mix::MixController& controller() const { return *mixer_; }
  mix::MixController& controller() { return *mixer_; }

 private:
  void decision_tick(std::uint64_t t_ms, JsonlWriter* log,
                     mix::MidiSink* midi, mix::OscSender* osc);
  void midi_in_loop();

  Config cfg_;
  std::unique_ptr<ingest::BlockSource> eeg_src_;
  std::unique_ptr<ingest::BlockSource> ecg_src_;
  std::vector<std::unique_ptr<ingest::BlockSource>> audio_src_;

  eeg::EegPipeline eeg_pipe_;
  ecg::EcgPipeline ecg_pipe_;
  std::vector<std::unique_ptr<va::VaEstimator>> va_estimators_;
  std::vector<std::unique_ptr<va::VaChannelPipeline>> va_pipes_;
  std::unique_ptr<mix::MixController> mixer_;

  std::atomic<bool> stop_{false};
  std::atomic<bool> stop_requested_{false};
  std::thread midi_in_;
  std::uint64_t decision_ticks_ = 0;
};

}  // namespace wf::session
