#include "wf/ingest/stream.hpp"

#include <stdexcept>

namespace wf::ingest {

const char* to_string(StreamKind kind) {
  switch (kind) {
    case StreamKind::eeg: return "eeg";
    case StreamKind::ecg: return "ecg";
    case StreamKind::audio: return "audio";
  }
  return "?";
}

int default_rate_hz(StreamKind kind) {
  switch (kind) {
    case StreamKind::eeg: return kEegRateHz;
    case StreamKind::ecg: return kEcgRateHz;
    case StreamKind::audio: return kAudioRateHz;
  }
  return 0;
}

std::size_t block_len(int sample_rate_hz, std::uint64_t block) {
  const auto rate = static_cast<std::uint64_t>(sample_rate_hz);
  const std::uint64_t hi = ((block + 1) * rate) / kBlocksPerSecond;
  const std::uint64_t lo = (block * rate) / kBlocksPerSecond;
  return static_cast<std::size_t>(hi - lo);
}

void StreamDescriptor::validate() const {
  if (channel_count < 1) {
    throw std::invalid_argument("stream: channel_count must be >= 1");
  }
  if (kind == StreamKind::eeg && channel_count != kEegElectrodes) {
    throw std::invalid_argument("stream: EEG requires 4 electrodes");
  }
  if (sample_rate_hz < 0) {
    throw std::invalid_argument("stream: sample_rate_hz must be positive");
  }
}

}  // namespace wf::ingest
