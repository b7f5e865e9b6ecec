#pragma once

#include <atomic>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "wf/ingest/queue.hpp"
#include "wf/ingest/stream.hpp"
#include "wf/ingest/synthetic.hpp"
#include "wf/kernels/resample.hpp"

namespace wf::ingest {

// Pull interface shared by all sources. next() returns blocks on the 50 ms
// grid in tick order; nullopt marks end of stream.
class BlockSource {
 public:
  virtual ~BlockSource() = default;
  virtual std::optional<SampleBlock> next() = 0;
  virtual const StreamDescriptor& descriptor() const = 0;
};

// CSV fixture reader. Layout:
//   # sample_rate_hz=<rate>
//   tick,ch0[,ch1,...]
//   0,<v>,...
// Throws std::runtime_error on malformed files, rate mismatch with the
// descriptor, or a channel count that violates the stream kind.
class CsvSource : public BlockSource {
 public:
  CsvSource(const StreamDescriptor& desc, const std::string& path);
  std::optional<SampleBlock> next() override;
  const StreamDescriptor& descriptor() const override { return desc_; }

 private:
  StreamDescriptor desc_;
  std::vector<std::vector<double>> channels_;
  std::uint64_t cursor_ = 0;
  std::uint64_t block_idx_ = 0;
};

// Mono RIFF-wave reader (PCM16 or float32). Rates above 30 kHz are
// converted through the sinc resampler at open; rates below are rejected.
class WavSource : public BlockSource {
 public:
  WavSource(const StreamDescriptor& desc, const std::string& path);
  std::optional<SampleBlock> next() override;
  const StreamDescriptor& descriptor() const override { return desc_; }

 private:
  StreamDescriptor desc_;
  std::vector<double> samples_;  // at 30 kHz
  std::uint64_t cursor_ = 0;
  std::uint64_t block_idx_ = 0;
};

// Seeded generator; one waveform shared by all channels plus per-channel
// Gaussian noise, drawn one value per sample so output is block-size
// invariant.
class SyntheticSource : public BlockSource {
 public:
  SyntheticSource(const StreamDescriptor& desc, const SyntheticSpec& spec,
                  std::uint64_t seed, double duration_s);
  std::optional<SampleBlock> next() override;
  const StreamDescriptor& descriptor() const override { return desc_; }

 private:
  StreamDescriptor desc_;
  SyntheticSpec spec_;
  std::vector<GaussianRng> noise_;
  std::uint64_t duration_ticks_;
  std::uint64_t cursor_ = 0;
  std::uint64_t block_idx_ = 0;
};

// Connects to a frame server and relays blocks through a bounded queue.
// The reader thread drops the oldest block when the queue is full and
// discards frames that move backwards in tick.
class SocketSource : public BlockSource {
 public:
  static constexpr std::size_t kQueueCapacity = 64;

  SocketSource(const StreamDescriptor& desc, const std::string& endpoint);
  ~SocketSource() override;

  std::optional<SampleBlock> next() override;
  const StreamDescriptor& descriptor() const override { return desc_; }

  std::uint64_t dropped() const { return dropped_.load(); }

 private:
  void reader_loop();

  StreamDescriptor desc_;
  int fd_ = -1;
  BoundedQueue<SampleBlock> queue_{kQueueCapacity};
  std::atomic<std::uint64_t> dropped_{0};
  std::thread reader_;
};

// Per-block audio rate conversion to 30 kHz (one resampler per channel).
// Identity when the input already runs at 30 kHz.
class AudioResampler {
 public:
  explicit AudioResampler(int in_rate_hz, int channel_count = 1,
                          kernels::Exec exec = kernels::Exec::parallel);

  SampleBlock process(const SampleBlock& in);

 private:
  int in_rate_;
  std::vector<kernels::SincResampler> lanes_;
  std::uint64_t out_tick_ = 0;
};

// Source factory. desc.source selects the backend:
//   "file:<path>"        CSV for EEG/ECG, RIFF-wave for audio
//   "synthetic:<spec>"   seeded generator (see SyntheticSpec)
//   "socket:<endpoint>"  frame stream ("unix:/path" or "host:port")
std::unique_ptr<BlockSource> open_stream(const StreamDescriptor& desc,
                                         std::uint64_t seed = 1,
                                         double duration_s = 60.0);

}  // namespace wf::ingest
