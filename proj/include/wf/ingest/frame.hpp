#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "wf/ingest/stream.hpp"

namespace wf::ingest {

// Socket frame layout, all integers little-endian:
//   u32 magic  u8 kind  u64 start_tick  u16 channel_count  u32 block_len
//   float32 samples, channel-major
constexpr std::uint32_t kFrameMagic = 0x57464C31;  // "WFL1"
constexpr std::size_t kFrameHeaderSize = 4 + 1 + 8 + 2 + 4;

std::vector<std::uint8_t> encode_frame(const SampleBlock& block,
                                       StreamKind kind);

struct DecodedFrame {
  StreamKind kind;
  SampleBlock block;
};

// Reader callback: fill exactly `len` bytes, return false on EOF/error.
using ReadExact = std::function<bool(std::uint8_t* dst, std::size_t len)>;

// Returns nullopt on clean EOF (no header bytes). Throws std::runtime_error
// on bad magic, bad kind, or truncated payload.
std::optional<DecodedFrame> read_frame(const ReadExact& read);

}  // namespace wf::ingest
