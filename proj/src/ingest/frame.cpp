#include "wf/ingest/frame.hpp"

#include <bit>
#include <cstring>
#include <stdexcept>

namespace wf::ingest {

namespace {

template <typename T>
void put_le(std::vector<std::uint8_t>& out, T value) {
  for (std::size_t i = 0; i < sizeof(T); ++i) {
    out.push_back(static_cast<std::uint8_t>((value >> (8 * i)) & 0xFF));
  }
}

template <typename T>
T get_le(const std::uint8_t* p) {
  T value = 0;
  for (std::size_t i = 0; i < sizeof(T); ++i) {
    value |= static_cast<T>(p[i]) << (8 * i);
  }
  return value;
}

}  // namespace

std::vector<std::uint8_t> encode_frame(const SampleBlock& block,
                                       StreamKind kind) {
  std::vector<std::uint8_t> out;
  out.reserve(kFrameHeaderSize + block.data.size() * 4);
  put_le<std::uint32_t>(out, kFrameMagic);
  out.push_back(static_cast<std::uint8_t>(kind));
  put_le<std::uint64_t>(out, block.start_tick);
  put_le<std::uint16_t>(out, static_cast<std::uint16_t>(block.channel_count));
  put_le<std::uint32_t>(out, static_cast<std::uint32_t>(block.frames));
  for (double s : block.data) {
    const auto f = static_cast<float>(s);
    std::uint32_t bits;
    std::memcpy(&bits, &f, 4);
    put_le<std::uint32_t>(out, bits);
  }
  return out;
}

std::optional<DecodedFrame> read_frame(const ReadExact& read) {
  std::uint8_t header[kFrameHeaderSize];
  if (!read(header, sizeof(header))) return std::nullopt;

  const auto magic = get_le<std::uint32_t>(header);
  if (magic != kFrameMagic) {
    throw std::runtime_error("frame: bad magic");
  }
  const std::uint8_t kind_byte = header[4];
  if (kind_byte > 2) throw std::runtime_error("frame: bad stream kind");

  DecodedFrame out;
  out.kind = static_cast<StreamKind>(kind_byte);
  out.block.start_tick = get_le<std::uint64_t>(header + 5);
  out.block.channel_count = get_le<std::uint16_t>(header + 13);
  out.block.frames = get_le<std::uint32_t>(header + 15);
  if (out.block.channel_count == 0) {
    throw std::runtime_error("frame: zero channels");
  }

  const std::size_t n =
      static_cast<std::size_t>(out.block.channel_count) * out.block.frames;
  std::vector<std::uint8_t> payload(n * 4);
  if (n > 0 && !read(payload.data(), payload.size())) {
    throw std::runtime_error("frame: truncated payload");
  }
  out.block.data.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto bits = get_le<std::uint32_t>(payload.data() + i * 4);
    float f;
    std::memcpy(&f, &bits, 4);
    out.block.data[i] = static_cast<double>(f);
  }
  return out;
}

}  // namespace wf::ingest
