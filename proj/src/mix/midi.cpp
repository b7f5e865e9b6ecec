#include "wf/mix/midi.hpp"

#include <algorithm>
#include <cmath>
#include <iostream>
#include <set>
#include <stdexcept>

namespace wf::mix {

void MidiMap::validate() const {
  if (midi_channel < 1 || midi_channel > 16) {
    throw std::invalid_argument("midi: channel must be 1..16");
  }
  if (num_channels < 1) {
    throw std::invalid_argument("midi: need at least the dry channel");
  }
  std::set<int> seen{strength_cc};
  if (strength_cc < 0 || strength_cc > 127) {
    throw std::invalid_argument("midi: strength_cc out of 0..127");
  }
  for (int i = 0; i < num_channels; ++i) {
    const int cc = cc_for(i);
    if (cc < 0 || cc > 127) {
      throw std::invalid_argument("midi: CC number out of 0..127");
    }
    if (!seen.insert(cc).second) {
      throw std::invalid_argument("midi: CC numbers must be unique");
    }
  }
}

int gain_to_cc(double gain) {
  const double clamped = std::clamp(gain, 0.0, 1.0);
  return static_cast<int>(std::lround(clamped * 127.0));
}

double strength_from_cc(int value) {
  return std::clamp((static_cast<double>(value) - 64.0) / 63.0, -1.0, 1.0);
}

CcEmitter::CcEmitter(const MidiMap& map) : map_(map) {
  map_.validate();
  last_sent_.assign(static_cast<std::size_t>(map_.num_channels), -1);
}

std::vector<CcMessage> CcEmitter::update(std::span<const double> gains) {
  if (gains.size() != last_sent_.size()) {
    throw std::invalid_argument("midi: gain vector length changed");
  }
  std::vector<CcMessage> out;
  for (std::size_t i = 0; i < gains.size(); ++i) {
    const int value = gain_to_cc(gains[i]);
    if (value == last_sent_[i]) continue;
    last_sent_[i] = value;
    out.push_back({static_cast<std::uint8_t>(map_.cc_for(static_cast<int>(i))),
                   static_cast<std::uint8_t>(value)});
  }
  return out;
}

std::vector<std::uint8_t> CcEmitter::encode(
    std::span<const CcMessage> messages) const {
  std::vector<std::uint8_t> bytes;
  bytes.reserve(messages.size() * 3);
  const auto status =
      static_cast<std::uint8_t>(0xB0 | (map_.midi_channel - 1));
  for (const CcMessage& m : messages) {
    bytes.push_back(status);
    bytes.push_back(m.cc);
    bytes.push_back(m.value);
  }
  return bytes;
}

MidiInParser::MidiInParser(int midi_channel,
                           std::function<void(int, int)> on_cc)
    : channel_(midi_channel), on_cc_(std::move(on_cc)) {}

void MidiInParser::feed(std::span<const std::uint8_t> bytes) {
  for (std::uint8_t b : bytes) {
    if (b & 0x80) {
      status_ = b;
      pending_cc_ = -1;
      continue;
    }
    const bool is_cc = (status_ & 0xF0) == 0xB0 &&
                       (status_ & 0x0F) == channel_ - 1;
    if (!is_cc) continue;
    if (pending_cc_ < 0) {
      pending_cc_ = b;
    } else {
      on_cc_(pending_cc_, b);
      pending_cc_ = -1;  // running status keeps status_
    }
  }
}

FileMidiSink::FileMidiSink(const std::string& path)
    : out_(path, std::ios::binary | std::ios::app) {}

void FileMidiSink::send(std::span<const std::uint8_t> bytes) {
  out_.write(reinterpret_cast<const char*>(bytes.data()),
             static_cast<std::streamsize>(bytes.size()));
  out_.flush();
}

std::unique_ptr<MidiSink> open_midi_sink(const std::string& port,
                                         bool headless) {
  if (port.empty()) return std::make_unique<NullMidiSink>();
  auto sink = std::make_unique<FileMidiSink>(port);
  if (sink->ok()) return sink;
  if (!headless) {
    std::cerr << "midi: cannot open port '" << port
              << "', continuing without output\n";
  }
  return std::make_unique<NullMidiSink>();
}

}  // namespace wf::mix
