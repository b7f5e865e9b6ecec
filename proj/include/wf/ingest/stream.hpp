#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace wf::ingest {

enum class StreamKind : std::uint8_t {
  eeg = 0,
  ecg = 1,
  audio = 2,
};

const char* to_string(StreamKind kind);

// Native per-kind sample rates.
constexpr int kEegRateHz = 250;
constexpr int kEcgRateHz = 1000;
constexpr int kAudioRateHz = 30000;
constexpr int kEegElectrodes = 4;

int default_rate_hz(StreamKind kind);

// Delivery grid: every source emits one block per 50 ms of stream time.
constexpr int kBlockMs = 50;
constexpr int kBlocksPerSecond = 1000 / kBlockMs;

// Samples in block index `block` (0-based) for a given rate; boundaries at
// floor((k+1)*rate/20), so 250 Hz alternates 12/13 and the grid stays exact.
std::size_t block_len(int sample_rate_hz, std::uint64_t block);

struct StreamDescriptor {
  StreamKind kind = StreamKind::ecg;
  int channel_count = 1;
  int sample_rate_hz = 0;  // 0 = kind default
  std::string source;      // "file:...", "synthetic:...", "socket:..."

  // Throws std::invalid_argument on contract violations (EEG needs 4
  // electrodes, positive rate/count).
  void validate() const;
};

struct SampleBlock {
  std::uint64_t start_tick = 0;
  int channel_count = 1;
  std::size_t frames = 0;        // samples per channel
  std::vector<double> data;      // channel-major, data[c * frames + i]

  std::span<const double> channel(int c) const {
    return std::span<const double>(data.data() + static_cast<std::size_t>(c) * frames,
                                   frames);
  }
  std::span<double> channel(int c) {
    return std::span<double>(data.data() + static_cast<std::size_t>(c) * frames,
                             frames);
  }
};

}  // namespace wf::ingest
