#include "wf/ingest/sources.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "wf/ingest/frame.hpp"
#include "wf/net/socket.hpp"

namespace wf::ingest {

namespace {

// Slice the next 50 ms block out of preloaded per-channel sample vectors.
std::optional<SampleBlock> slice_block(
    const std::vector<std::vector<double>>& channels, std::uint64_t& cursor,
    std::uint64_t& block_idx, int rate) {
  const std::uint64_t total = channels.empty() ? 0 : channels[0].size();
  if (cursor >= total) return std::nullopt;
  const std::size_t want = block_len(rate, block_idx);
  const std::size_t len =
      static_cast<std::size_t>(std::min<std::uint64_t>(want, total - cursor));
  SampleBlock block;
  block.start_tick = cursor;
  block.channel_count = static_cast<int>(channels.size());
  block.frames = len;
  block.data.resize(channels.size() * len);
  for (std::size_t c = 0; c < channels.size(); ++c) {
    std::copy_n(channels[c].begin() + static_cast<std::ptrdiff_t>(cursor), len,
                block.data.begin() + static_cast<std::ptrdiff_t>(c * len));
  }
  cursor += len;
  ++block_idx;
  return block;
}

}  // namespace

CsvSource::CsvSource(const StreamDescriptor& desc, const std::string& path)
    : desc_(desc) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("csv: cannot open " + path);

  std::string line;
  if (!std::getline(in, line) || line.rfind("# sample_rate_hz=", 0) != 0) {
    throw std::runtime_error("csv: missing '# sample_rate_hz=' line in " +
                             path);
  }
  int rate = 0;
  try {
    rate = std::stoi(line.substr(std::string("# sample_rate_hz=").size()));
  } catch (const std::exception&) {
    throw std::runtime_error("csv: bad sample rate in " + path);
  }
  if (rate <= 0) throw std::runtime_error("csv: bad sample rate in " + path);
  const int expected =
      desc_.sample_rate_hz > 0 ? desc_.sample_rate_hz : default_rate_hz(desc_.kind);
  if (rate != expected) {
    throw std::runtime_error("csv: declared rate " + std::to_string(rate) +
                             " does not match stream rate " +
                             std::to_string(expected));
  }
  desc_.sample_rate_hz = rate;

  if (!std::getline(in, line) || line.rfind("tick", 0) != 0) {
    throw std::runtime_error("csv: missing 'tick,ch0,...' header in " + path);
  }
  int columns = 0;
  for (char ch : line) {
    if (ch == ',') ++columns;
  }
  if (columns < 1) throw std::runtime_error("csv: no channel columns in " + path);
  desc_.channel_count = columns;
  desc_.validate();

  channels_.assign(static_cast<std::size_t>(columns), {});
  std::uint64_t row = 0;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::string cell;
    if (!std::getline(ls, cell, ',')) break;
    const auto tick = static_cast<std::uint64_t>(std::stoull(cell));
    if (tick != row) {
      throw std::runtime_error("csv: non-contiguous tick at row " +
                               std::to_string(row));
    }
    for (int c = 0; c < columns; ++c) {
      if (!std::getline(ls, cell, ',')) {
        throw std::runtime_error("csv: short row at tick " +
                                 std::to_string(tick));
      }
      channels_[static_cast<std::size_t>(c)].push_back(std::stod(cell));
    }
    ++row;
  }
}

std::optional<SampleBlock> CsvSource::next() {
  return slice_block(channels_, cursor_, block_idx_, desc_.sample_rate_hz);
}

namespace {

std::uint32_t read_u32(std::istream& in) {
  std::uint8_t b[4];
  in.read(reinterpret_cast<char*>(b), 4);
  return static_cast<std::uint32_t>(b[0]) | (static_cast<std::uint32_t>(b[1]) << 8) |
         (static_cast<std::uint32_t>(b[2]) << 16) |
         (static_cast<std::uint32_t>(b[3]) << 24);
}

std::uint16_t read_u16(std::istream& in) {
  std::uint8_t b[2];
  in.read(reinterpret_cast<char*>(b), 2);
  return static_cast<std::uint16_t>(b[0] | (b[1] << 8));
}

}  // namespace

WavSource::WavSource(const StreamDescriptor& desc, const std::string& path)
    : desc_(desc) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("wav: cannot open " + path);

  char tag[5] = {};
  in.read(tag, 4);
  if (std::strncmp(tag, "RIFF", 4) != 0) {
    throw std::runtime_error("wav: not a RIFF file: " + path);
  }
  read_u32(in);  // riff size
  in.read(tag, 4);
  if (std::strncmp(tag, "WAVE", 4) != 0) {
    throw std::runtime_error("wav: not a WAVE file: " + path);
  }

  int format = 0, channels = 0, bits = 0, rate = 0;
  std::vector<double> raw;
  while (in.read(tag, 4)) {
    const std::uint32_t size = read_u32(in);
    if (std::strncmp(tag, "fmt ", 4) == 0) {
      format = read_u16(in);
      channels = read_u16(in);
      rate = static_cast<int>(read_u32(in));
      read_u32(in);  // byte rate
      read_u16(in);  // block align
      bits = read_u16(in);
      if (size > 16) in.seekg(size - 16, std::ios::cur);
    } else if (std::strncmp(tag, "data", 4) == 0) {
      if (channels != 1) {
        throw std::runtime_error("wav: expected mono (one file per channel)");
      }
      if (format == 1 && bits == 16) {
        const std::size_t n = size / 2;
        raw.resize(n);
        for (std::size_t i = 0; i < n; ++i) {
          const std::uint16_t u = read_u16(in);
          raw[i] = static_cast<double>(static_cast<std::int16_t>(u)) / 32768.0;
        }
      } else if (format == 3 && bits == 32) {
        const std::size_t n = size / 4;
        raw.resize(n);
        for (std::size_t i = 0; i < n; ++i) {
          const std::uint32_t u = read_u32(in);
          float f;
          std::memcpy(&f, &u, 4);
          raw[i] = static_cast<double>(f);
        }
      } else {
        throw std::runtime_error("wav: unsupported sample format");
      }
      break;
    } else {
      in.seekg(size + (size & 1), std::ios::cur);
    }
  }
  if (rate == 0 || raw.empty()) {
    throw std::runtime_error("wav: missing fmt/data chunk in " + path);
  }
  if (rate < kAudioRateHz) {
    throw std::runtime_error("wav: rate below 30000 Hz, upsampling unsupported");
  }
  if (rate == kAudioRateHz) {
    samples_ = std::move(raw);
  } else {
    kernels::SincResampler rs(rate, kAudioRateHz);
    samples_ = rs.process(raw);
  }
  desc_.sample_rate_hz = kAudioRateHz;
  desc_.channel_count = 1;
  desc_.validate();
}

std::optional<SampleBlock> WavSource::next() {
  const std::uint64_t total = samples_.size();
  if (cursor_ >= total) return std::nullopt;
  const std::size_t want = block_len(kAudioRateHz, block_idx_);
  const std::size_t len =
      static_cast<std::size_t>(std::min<std::uint64_t>(want, total - cursor_));
  SampleBlock block;
  block.start_tick = cursor_;
  block.channel_count = 1;
  block.frames = len;
  block.data.assign(samples_.begin() + static_cast<std::ptrdiff_t>(cursor_),
                    samples_.begin() + static_cast<std::ptrdiff_t>(cursor_ + len));
  cursor_ += len;
  ++block_idx_;
  return block;
}

SyntheticSource::SyntheticSource(const StreamDescriptor& desc,
                                 const SyntheticSpec& spec, std::uint64_t seed,
                                 double duration_s)
    : desc_(desc), spec_(spec) {
  if (desc_.sample_rate_hz == 0) desc_.sample_rate_hz = default_rate_hz(desc_.kind);
  desc_.validate();
  duration_ticks_ = static_cast<std::uint64_t>(
      std::llround(duration_s * desc_.sample_rate_hz));
  noise_.reserve(static_cast<std::size_t>(desc_.channel_count));
  for (int c = 0; c < desc_.channel_count; ++c) {
    noise_.emplace_back(seed + static_cast<std::uint64_t>(c) * 0x9E3779B97F4A7C15ULL);
  }
}

std::optional<SampleBlock> SyntheticSource::next() {
  if (cursor_ >= duration_ticks_) return std::nullopt;
  const std::size_t want = block_len(desc_.sample_rate_hz, block_idx_);
  const std::size_t len = static_cast<std::size_t>(
      std::min<std::uint64_t>(want, duration_ticks_ - cursor_));
  SampleBlock block;
  block.start_tick = cursor_;
  block.channel_count = desc_.channel_count;
  block.frames = len;
  block.data.resize(static_cast<std::size_t>(desc_.channel_count) * len);
  for (int c = 0; c < desc_.channel_count; ++c) {
    auto out = block.channel(c);
    for (std::size_t i = 0; i < len; ++i) {
      double v = spec_.value_at(cursor_ + i, desc_.sample_rate_hz);
      if (spec_.noise_sigma > 0.0) {
        v += spec_.noise_sigma * noise_[static_cast<std::size_t>(c)].next();
      }
      out[i] = v;
    }
  }
  cursor_ += len;
  ++block_idx_;
  return block;
}

SocketSource::SocketSource(const StreamDescriptor& desc,
                           const std::string& endpoint)
    : desc_(desc) {
  if (desc_.sample_rate_hz == 0) desc_.sample_rate_hz = default_rate_hz(desc_.kind);
  desc_.validate();
  fd_ = net::connect_stream(endpoint);
  if (fd_ < 0) {
    throw std::runtime_error("socket: cannot reach " + endpoint);
  }
  reader_ = std::thread([this] { reader_loop(); });
}

SocketSource::~SocketSource() {
  net::close_fd(fd_);
  queue_.close();
  if (reader_.joinable()) reader_.join();
}

void SocketSource::reader_loop() {
  std::uint64_t next_tick = 0;
  try {
    for (;;) {
      auto frame = read_frame([this](std::uint8_t* dst, std::size_t len) {
        return net::read_exact(fd_, dst, len);
      });
      if (!frame) break;
      if (frame->kind != desc_.kind ||
          frame->block.channel_count != desc_.channel_count) {
        dropped_.fetch_add(1);
        continue;
      }
      if (frame->block.start_tick < next_tick) {
        dropped_.fetch_add(1);  // out of tick order
        continue;
      }
      next_tick = frame->block.start_tick + frame->block.frames;
      dropped_.fetch_add(queue_.push_drop_oldest(std::move(frame->block)));
    }
  } catch (const std::exception&) {
    // malformed stream: terminate delivery
  }
  queue_.close();
}

std::optional<SampleBlock> SocketSource::next() { return queue_.pop(); }

AudioResampler::AudioResampler(int in_rate_hz, int channel_count,
                               kernels::Exec exec)
    : in_rate_(in_rate_hz) {
  if (in_rate_hz < kAudioRateHz) {
    throw std::invalid_argument("resample_audio: upsampling unsupported");
  }
  for (int c = 0; c < channel_count; ++c) {
    lanes_.emplace_back(in_rate_hz, kAudioRateHz, exec);
  }
}

SampleBlock AudioResampler::process(const SampleBlock& in) {
  if (in.channel_count != static_cast<int>(lanes_.size())) {
    throw std::invalid_argument("resample_audio: channel count mismatch");
  }
  SampleBlock out;
  out.channel_count = in.channel_count;
  out.start_tick = out_tick_;
  std::vector<std::vector<double>> lanes_out;
  lanes_out.reserve(lanes_.size());
  for (std::size_t c = 0; c < lanes_.size(); ++c) {
    lanes_out.push_back(lanes_[c].process(in.channel(static_cast<int>(c))));
  }
  out.frames = lanes_out.empty() ? 0 : lanes_out[0].size();
  out.data.reserve(out.frames * lanes_.size());
  for (auto& lane : lanes_out) {
    out.data.insert(out.data.end(), lane.begin(), lane.end());
  }
  out_tick_ += out.frames;
  return out;
}

std::unique_ptr<BlockSource> open_stream(const StreamDescriptor& desc,
                                         std::uint64_t seed,
                                         double duration_s) {
  const std::string& src = desc.source;
  if (src.rfind("file:", 0) == 0) {
    const std::string path = src.substr(5);
    if (desc.kind == StreamKind::audio) {
      return std::make_unique<WavSource>(desc, path);
    }
    return std::make_unique<CsvSource>(desc, path);
  }
  if (src.rfind("synthetic:", 0) == 0) {
    return std::make_unique<SyntheticSource>(
        desc, SyntheticSpec::parse(src.substr(10)), seed, duration_s);
  }
  if (src.rfind("socket:", 0) == 0) {
    return std::make_unique<SocketSource>(desc, src.substr(7));
  }
  throw std::invalid_argument("open_stream: unknown source '" + src + "'");
}

}  // namespace wf::ingest
