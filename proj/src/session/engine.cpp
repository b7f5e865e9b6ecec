#include "wf/session/engine.hpp"

#include <fcntl.h>
#include <poll.h>
#include <unistd.h>

#include <cmath>

namespace wf::session {

namespace {

eeg::EegPipeline::Config eeg_config(const Config& cfg) {
  eeg::EegPipeline::Config out;
  out.hop_samples = cfg.eeg_hop_samples;
  out.artifact.theta_flat_uv = cfg.eeg_theta_flat_uv;
  out.artifact.t_dead_windows = cfg.eeg_t_dead_windows;
  return out;
}

ecg::EcgPipeline::Config ecg_config(const Config& cfg) {
  ecg::EcgPipeline::Config out;
  out.baevsky.bin_ms = cfg.ecg_bin_ms;
  out.baevsky.mxdmn_floor_s = cfg.ecg_mxdmn_floor_s;
  out.baevsky.min_intervals = cfg.ecg_min_intervals;
  out.cal_median = cfg.ecg_cal_median;
  out.cal_spread = cfg.ecg_cal_spread;
  return out;
}

}  // namespace

Engine::Engine(const Config& cfg, std::vector<rules::Ruleset> rulesets)
    : cfg_(cfg), eeg_pipe_(eeg_config(cfg)), ecg_pipe_(ecg_config(cfg)) {
  cfg_.validate();

  ingest::StreamDescriptor eeg_desc{ingest::StreamKind::eeg,
                                    ingest::kEegElectrodes,
                                    ingest::kEegRateHz, cfg_.eeg_source};
  ingest::StreamDescriptor ecg_desc{ingest::StreamKind::ecg, 1,
                                    ingest::kEcgRateHz, cfg_.ecg_source};
  eeg_src_ = ingest::open_stream(eeg_desc, cfg_.stream_seed(0), cfg_.duration_s);
  ecg_src_ = ingest::open_stream(ecg_desc, cfg_.stream_seed(1), cfg_.duration_s);

  const auto mode = cfg_.audio_estimator == "external"
                        ? va::EstimatorMode::external
                        : va::EstimatorMode::builtin;
  const auto hop = static_cast<std::size_t>(
      std::llround(cfg_.audio_hop_s * va::kSampleRateHz));
  for (int c = 0; c <= cfg_.fx_channels; ++c) {
    ingest::StreamDescriptor desc{ingest::StreamKind::audio, 1,
                                  ingest::kAudioRateHz, cfg_.audio_source(c)};
    audio_src_.push_back(
        ingest::open_stream(desc, cfg_.stream_seed(2 + c), cfg_.duration_s));
    va_estimators_.push_back(std::make_unique<va::VaEstimator>(
        mode, cfg_.audio_external_endpoint));
    va::VaChannelPipeline::Config pc;
    pc.channel_id = c;
    pc.hop_samples = hop;
    pc.static_va = cfg_.va_override(c);
    va_pipes_.push_back(std::make_unique<va::VaChannelPipeline>(
        pc, va_estimators_.back().get()));
  }

  mix::MixController::Config mc;
  mc.gains.tau = cfg_.rules_tau;
  mc.gains.g_floor = cfg_.rules_g_floor;
  mc.midi.midi_channel = cfg_.midi_channel;
  mc.midi.cc_base = cfg_.midi_cc_base;
  mc.midi.strength_cc = cfg_.midi_strength_cc;
  mc.midi.num_channels = cfg_.fx_channels + 1;
  mc.smoothing_tau_s = cfg_.mix_smoothing_tau_s;
  mc.initial_strength = cfg_.mix_strength;
  mixer_ = std::make_unique<mix::MixController>(std::move(rulesets), mc);
}

Engine::~Engine() {
  stop_.store(true);
  if (midi_in_.joinable()) midi_in_.join();
}

void Engine::midi_in_loop() {
  const int fd = ::open(cfg_.midi_in_port.c_str(), O_RDONLY | O_NONBLOCK);
  if (fd < 0) return;
  mix::MidiInParser parser(cfg_.midi_channel, [this](int cc, int value) {
    if (cc == cfg_.midi_strength_cc) mixer_->on_strength_cc(value);
  });
  std::uint8_t buf[256];
  while (!stop_.load()) {
    pollfd pfd{fd, POLLIN, 0};
    if (::poll(&pfd, 1, 20) <= 0) continue;
    const ssize_t n = ::read(fd, buf, sizeof(buf));
    if (n <= 0) continue;
    parser.feed(std::span<const std::uint8_t>(buf, static_cast<std::size_t>(n)));
  }
  ::close(fd);
}

Engine::RunStats Engine::run(JsonlWriter* log, mix::MidiSink* midi,
                             mix::OscSender* osc) {
  if (!cfg_.midi_in_port.empty() && !midi_in_.joinable()) {
    midi_in_ = std::thread([this] { midi_in_loop(); });
  }

  RunStats stats;
  const auto blocks_per_tick =
      static_cast<std::uint64_t>(cfg_.mix_tick_ms / ingest::kBlockMs);
  for (;;) {
    if (stop_requested_.load()) break;
    auto eeg_block = eeg_src_->next();
    auto ecg_block = ecg_src_->next();
    if (!eeg_block || !ecg_block) break;
    bool audio_eos = false;
    std::vector<ingest::SampleBlock> audio_blocks;
    audio_blocks.reserve(audio_src_.size());
    for (auto& src : audio_src_) {
      auto block = src->next();
      if (!block) {
        audio_eos = true;
        break;
      }
      audio_blocks.push_back(std::move(*block));
    }
    if (audio_eos) break;

    eeg_pipe_.consume(*eeg_block);
    ecg_pipe_.consume(*ecg_block);
    for (std::size_t c = 0; c < audio_blocks.size(); ++c) {
      va_pipes_[c]->consume(audio_blocks[c].channel(0));
    }

    ++stats.blocks;
    if (stats.blocks % blocks_per_tick == 0) {
      decision_tick(stats.blocks * ingest::kBlockMs, log, midi, osc);
      ++stats.decision_ticks;
    }
  }
  stop_.store(true);
  return stats;
}

void Engine::decision_tick(std::uint64_t t_ms, JsonlWriter* log,
                           mix::MidiSink* midi, mix::OscSender* osc) {
  mix::FeatureSnapshot snap;
  snap.eeg = eeg_pipe_.latest();
  snap.stress = ecg_pipe_.latest();
  snap.va_dry = va_pipes_[0]->latest();
  for (int c = 1; c <= cfg_.fx_channels; ++c) {
    snap.va_fx.push_back(va_pipes_[static_cast<std::size_t>(c)]->latest());
  }
  snap.sensors.eeg_active = eeg_pipe_.status().device_active;
  snap.sensors.ecg_active = ecg_pipe_.device_active();

  const mix::TickResult result =
      mixer_->tick(snap, cfg_.mix_tick_ms / 1000.0);

  if (midi != nullptr && !result.midi_bytes.empty()) {
    midi->send(result.midi_bytes);
  }
  if (osc != nullptr && osc->is_open()) {
    for (const mix::CcMessage& m : result.midi) {
      const int channel = static_cast<int>(m.cc) - cfg_.midi_cc_base;
      osc->send_gain(channel,
                     result.smoothed_gains[static_cast<std::size_t>(channel)]);
    }
  }
  if (log != nullptr) {
    SessionEvent ev;
    ev.tick_ms = t_ms;
    ev.attention = snap.eeg.attention;
    ev.relaxation = snap.eeg.relaxation;
    ev.eeg_valid = snap.eeg.valid;
    ev.eeg_imputed = snap.eeg.imputed;
    ev.stress_raw = snap.stress.si_raw;
    ev.stress_norm = snap.stress.si_norm;
    ev.ecg_valid = snap.stress.valid;
    ev.ecg_imputed = snap.stress.imputed;
    ev.va_dry = snap.va_dry;
    ev.va_fx = snap.va_fx;
    ev.eeg_active = snap.sensors.eeg_active;
    ev.ecg_active = snap.sensors.ecg_active;
    ev.active_ruleset = result.ruleset_name;
    ev.fired_rule = result.rule_description;
    ev.strength = result.strength;
    ev.raw_gains = result.raw_gains;
    ev.smoothed_gains = result.smoothed_gains;
    log->write(ev);
  }
  ++decision_ticks_;
}

}  // namespace wf::session
