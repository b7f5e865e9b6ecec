#pragma once

#include <cstdint>
#include <fstream>
#include <functional>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace wf::mix {

// CC assignment: channel index i (0 = dry) maps to controller cc_base + i.
struct MidiMap {
  int midi_channel = 1;  // 1..16
  int cc_base = 20;
  int strength_cc = 1;
  int num_channels = 0;  // dry + n FX

  void validate() const;  // throws std::invalid_argument
  int cc_for(int channel_index) const { return cc_base + channel_index; }
};

struct CcMessage {
  std::uint8_t cc;
  std::uint8_t value;
};

// round-half-up quantization to the 7-bit controller range
int gain_to_cc(double gain);

// strength = (value - 64) / 63, clamped to [-1, 1]
double strength_from_cc(int value);

// Stateful delta suppression: only channels whose quantized value changed
// since the last update produce messages.
class CcEmitter {
 public:
  explicit CcEmitter(const MidiMap& map);

  std::vector<CcMessage> update(std::span<const double> gains);

  // Raw wire bytes: 0xB<channel-1> cc value per message.
  std::vector<std::uint8_t> encode(std::span<const CcMessage> messages) const;

 private:
  MidiMap map_;
  std::vector<int> last_sent_;
};

// Minimal CC input parser (handles running status); invokes on_cc for every
// Control Change on the mapped channel.
class MidiInParser {
 public:
  MidiInParser(int midi_channel, std::function<void(int cc, int value)> on_cc);

  void feed(std::span<const std::uint8_t> bytes);

 private:
  int channel_;
  std::function<void(int, int)> on_cc_;
  std::uint8_t status_ = 0;
  int pending_cc_ = -1;
};

// Output port abstraction; the engine keeps running when no port is
// available (headless).
class MidiSink {
 public:
  virtual ~MidiSink() = default;
  virtual void send(std::span<const std::uint8_t> bytes) = 0;
};

class NullMidiSink final : public MidiSink {
 public:
  void send(std::span<const std::uint8_t>) override {}
};

// Writes raw MIDI bytes to a path (device node, FIFO, or plain file).
class FileMidiSink final : public MidiSink {
 public:
  explicit FileMidiSink(const std::string& path);
  bool ok() const { return out_.is_open(); }
  void send(std::span<const std::uint8_t> bytes) override;

 private:
  std::ofstream out_;
};

// Opens the configured port, or falls back to a null sink with a warning on
// stderr (headless suppresses the warning).
std::unique_ptr<MidiSink> open_midi_sink(const std::string& port,
                                         bool headless);

}  // namespace wf::mix
