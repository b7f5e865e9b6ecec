#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <unistd.h>

#include <cstdint>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <random>
#include <thread>

#include "oracles.hpp"
#include "wf/ingest/frame.hpp"
#include "wf/ingest/queue.hpp"
#include "wf/ingest/sources.hpp"
#include "wf/net/socket.hpp"

using namespace wf::ingest;

namespace {

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() /
          ("wf_ingest_" + std::to_string(::getpid()) + "_" + name))
      .string();
}

void write_csv(const std::string& path, int rate,
               const std::vector<std::vector<double>>& channels) {
  std::ofstream out(path);
  out << "# sample_rate_hz=" << rate << "\n";
  out << "tick";
  for (std::size_t c = 0; c < channels.size(); ++c) out << ",ch" << c;
  out << "\n";
  for (std::size_t i = 0; i < channels[0].size(); ++i) {
    out << i;
    for (const auto& ch : channels) out << "," << ch[i];
    out << "\n";
  }
}

void write_wav_pcm16(const std::string& path, int rate,
                     const std::vector<double>& samples) {
  std::ofstream out(path, std::ios::binary);
  auto u32 = [&](std::uint32_t v) { out.write(reinterpret_cast<char*>(&v), 4); };
  auto u16 = [&](std::uint16_t v) { out.write(reinterpret_cast<char*>(&v), 2); };
  const std::uint32_t data_size = static_cast<std::uint32_t>(samples.size() * 2);
  out.write("RIFF", 4);
  u32(36 + data_size);
  out.write("WAVE", 4);
  out.write("fmt ", 4);
  u32(16);
  u16(1);  // PCM
  u16(1);  // mono
  u32(static_cast<std::uint32_t>(rate));
  u32(static_cast<std::uint32_t>(rate * 2));
  u16(2);
  u16(16);
  out.write("data", 4);
  u32(data_size);
  for (double s : samples) {
    const auto v = static_cast<std::int16_t>(
        std::lround(std::clamp(s, -1.0, 1.0) * 32767.0));
    u16(static_cast<std::uint16_t>(v));
  }
}

std::vector<SampleBlock> drain_source(BlockSource& src) {
  std::vector<SampleBlock> out;
  while (auto block = src.next()) out.push_back(std::move(*block));
  return out;
}

}  // namespace

TEST_CASE("block grid: 250 Hz alternates 12/13 samples, others are flat") {
  std::size_t eeg_total = 0;
  for (std::uint64_t b = 0; b < 20; ++b) {
    const std::size_t len = block_len(250, b);
    CHECK((len == 12 || len == 13));
    eeg_total += len;
  }
  CHECK(eeg_total == 250);
  CHECK(block_len(1000, 7) == 50);
  CHECK(block_len(30000, 123) == 1500);
}

TEST_CASE("csv source delivers the declared stream in order") {
  const auto path = temp_path("ecg.csv");
  std::vector<std::vector<double>> data{std::vector<double>(1000)};
  for (std::size_t i = 0; i < 1000; ++i) data[0][i] = double(i) * 0.5;
  write_csv(path, 1000, data);

  StreamDescriptor desc{StreamKind::ecg, 1, 1000, "file:" + path};
  auto src = open_stream(desc);
  const auto blocks = drain_source(*src);
  REQUIRE(blocks.size() == 20);
  std::uint64_t tick = 0;
  for (const auto& b : blocks) {
    CHECK(b.start_tick == tick);
    CHECK(b.frames == 50);
    tick += b.frames;
  }
  CHECK(blocks[3].channel(0)[0] == doctest::Approx(150 * 0.5));
  std::filesystem::remove(path);
}

TEST_CASE("csv source rejects rate mismatch and bad headers") {
  const auto path = temp_path("bad.csv");
  write_csv(path, 500, {std::vector<double>(10, 1.0)});
  StreamDescriptor desc{StreamKind::ecg, 1, 1000, "file:" + path};
  CHECK_THROWS_WITH_AS(open_stream(desc), doctest::Contains("declared rate"),
                       std::runtime_error);

  std::ofstream(path) << "tick,ch0\n0,1\n";  // missing rate line
  CHECK_THROWS_AS(open_stream(desc), std::runtime_error);
  std::filesystem::remove(path);
}

TEST_CASE("an EEG file with two channels violates the electrode contract") {
  const auto path = temp_path("eeg2.csv");
  write_csv(path, 250, {std::vector<double>(10, 1.0), std::vector<double>(10, 2.0)});
  StreamDescriptor desc{StreamKind::eeg, 4, 250, "file:" + path};
  CHECK_THROWS_WITH_AS(open_stream(desc), doctest::Contains("4 electrodes"),
                       std::invalid_argument);
  std::filesystem::remove(path);
}

TEST_CASE("replaying a file source twice is bit-identical") {
  const auto path = temp_path("replay.csv");
  std::mt19937_64 gen(3);
  std::vector<std::vector<double>> data{std::vector<double>(500)};
  for (auto& v : data[0]) v = oracle::uniform(gen, -100.0, 100.0);
  write_csv(path, 1000, data);

  StreamDescriptor desc{StreamKind::ecg, 1, 1000, "file:" + path};
  auto a = drain_source(*open_stream(desc));
  auto b = drain_source(*open_stream(desc));
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].start_tick == b[i].start_tick);
    CHECK(std::memcmp(a[i].data.data(), b[i].data.data(),
                      a[i].data.size() * sizeof(double)) == 0);
  }
  std::filesystem::remove(path);
}

TEST_CASE("synthetic EEG sine peaks at 10 Hz on every channel") {
  StreamDescriptor desc{StreamKind::eeg, 4, 250,
                        "synthetic:sine 10Hz amp 50"};
  auto src = open_stream(desc, 1, 8.0);
  std::array<std::vector<double>, 4> channels;
  while (auto block = src->next()) {
    for (int c = 0; c < 4; ++c) {
      const auto span = block->channel(c);
      channels[c].insert(channels[c].end(), span.begin(), span.end());
    }
  }
  REQUIRE(channels[0].size() == 2000);
  for (int c = 0; c < 4; ++c) {
    std::span<const double> window(channels[c].data(), 1000);
    std::size_t best_bin = 0;
    double best = -1.0;
    for (std::size_t k = 1; k <= 500; ++k) {
      const double p = oracle::dft_bin_power(window, k);
      if (p > best) {
        best = p;
        best_bin = k;
      }
    }
    CHECK(best_bin == 40);  // 40 * 250 / 1000 = 10 Hz
  }
}

TEST_CASE("identical seeds give bit-identical synthetic streams") {
  StreamDescriptor desc{StreamKind::ecg, 1, 1000,
                        "synthetic:pulse 1.25Hz amp 800 noise 5"};
  auto a = drain_source(*open_stream(desc, 99, 2.0));
  auto b = drain_source(*open_stream(desc, 99, 2.0));
  auto c = drain_source(*open_stream(desc, 100, 2.0));
  REQUIRE(a.size() == b.size());
  bool all_equal = true;
  for (std::size_t i = 0; i < a.size(); ++i) {
    all_equal = all_equal &&
                std::memcmp(a[i].data.data(), b[i].data.data(),
                            a[i].data.size() * sizeof(double)) == 0;
  }
  CHECK(all_equal);
  // different seed, noise present -> different samples
  bool any_diff = false;
  for (std::size_t i = 0; i < std::min(a.size(), c.size()); ++i) {
    any_diff = any_diff ||
               std::memcmp(a[i].data.data(), c[i].data.data(),
                           a[i].data.size() * sizeof(double)) != 0;
  }
  CHECK(any_diff);
}

TEST_CASE("synthetic spec parser rejects malformed text") {
  CHECK_THROWS_AS(SyntheticSpec::parse("square 10Hz amp 1"),
                  std::invalid_argument);
  CHECK_THROWS_AS(SyntheticSpec::parse("sine 10 amp 1"), std::invalid_argument);
  CHECK_THROWS_AS(SyntheticSpec::parse("sine 10Hz"), std::invalid_argument);
  CHECK_THROWS_AS(SyntheticSpec::parse("sine 10Hz amp 1 noise"),
                  std::invalid_argument);
  const auto spec = SyntheticSpec::parse("pulse 1.25Hz amp 800 noise 5");
  CHECK(spec.wave == SyntheticSpec::Wave::pulse);
  CHECK(spec.freq_hz == doctest::Approx(1.25));
  CHECK(spec.noise_sigma == doctest::Approx(5.0));
}

TEST_CASE("gaplessness holds across sources and block sizes") {
  // property: start_tick_next = start_tick + frames for every source kind
  std::mt19937_64 gen(21);
  for (int trial = 0; trial < 8; ++trial) {
    const double duration = 0.3 + oracle::uniform(gen, 0.0, 1.5);
    StreamDescriptor desc{StreamKind::eeg, 4, 250, "synthetic:sine 6Hz amp 20"};
    auto src = open_stream(desc, trial, duration);
    std::uint64_t tick = 0;
    while (auto block = src->next()) {
      CHECK(block->start_tick == tick);
      tick += block->frames;
    }
    CHECK(tick == static_cast<std::uint64_t>(std::llround(duration * 250)));
  }
}

TEST_CASE("wav source resamples 48 kHz fixtures to 30 kHz") {
  const auto path = temp_path("tone.wav");
  write_wav_pcm16(path, 48000, oracle::sine(48000, 440.0, 48000.0, 0.5));
  StreamDescriptor desc{StreamKind::audio, 1, 30000, "file:" + path};
  auto blocks = drain_source(*open_stream(desc));
  std::size_t total = 0;
  for (const auto& b : blocks) total += b.frames;
  CHECK(total == 30000);
  std::filesystem::remove(path);
}

TEST_CASE("wav source rejects rates below 30 kHz") {
  const auto path = temp_path("low.wav");
  write_wav_pcm16(path, 22050, std::vector<double>(2205, 0.0));
  StreamDescriptor desc{StreamKind::audio, 1, 30000, "file:" + path};
  CHECK_THROWS_WITH_AS(open_stream(desc), doctest::Contains("upsampling"),
                       std::runtime_error);
  std::filesystem::remove(path);
}

TEST_CASE("audio block resampler: per-block lengths and channel checks") {
  AudioResampler rs(48000, 1);
  SampleBlock in;
  in.channel_count = 1;
  in.frames = 4800;
  in.data.assign(4800, 0.1);
  const SampleBlock out = rs.process(in);
  CHECK(out.frames == 3000);
  CHECK(out.start_tick == 0);
  const SampleBlock out2 = rs.process(in);
  CHECK(out2.start_tick == 3000);
  CHECK_THROWS_AS(AudioResampler(22050, 1), std::invalid_argument);
}

TEST_CASE("frame codec round-trips blocks bit-exactly at float32") {
  SampleBlock block;
  block.start_tick = 123456789;
  block.channel_count = 4;
  block.frames = 13;
  std::mt19937_64 gen(9);
  for (std::size_t i = 0; i < 4 * 13; ++i) {
    // float32-representable values survive the wire exactly
    block.data.push_back(static_cast<float>(oracle::uniform(gen, -50.0, 50.0)));
  }
  const auto bytes = encode_frame(block, StreamKind::eeg);
  CHECK(bytes.size() == kFrameHeaderSize + 4 * 13 * 4);

  std::size_t cursor = 0;
  auto reader = [&](std::uint8_t* dst, std::size_t len) {
    if (cursor + len > bytes.size()) return false;
    std::memcpy(dst, bytes.data() + cursor, len);
    cursor += len;
    return true;
  };
  const auto decoded = read_frame(reader);
  REQUIRE(decoded.has_value());
  CHECK(decoded->kind == StreamKind::eeg);
  CHECK(decoded->block.start_tick == block.start_tick);
  CHECK(decoded->block.channel_count == 4);
  CHECK(decoded->block.frames == 13);
  CHECK(decoded->block.data == block.data);
}

TEST_CASE("frame codec rejects bad magic and truncated payloads") {
  SampleBlock block;
  block.channel_count = 1;
  block.frames = 4;
  block.data = {1.0, 2.0, 3.0, 4.0};
  auto bytes = encode_frame(block, StreamKind::ecg);
  bytes[0] ^= 0xFF;
  std::size_t cursor = 0;
  auto reader = [&](std::uint8_t* dst, std::size_t len) {
    if (cursor + len > bytes.size()) return false;
    std::memcpy(dst, bytes.data() + cursor, len);
    cursor += len;
    return true;
  };
  CHECK_THROWS_WITH_AS(read_frame(reader), doctest::Contains("magic"),
                       std::runtime_error);

  bytes[0] ^= 0xFF;  // restore magic, truncate payload
  bytes.resize(bytes.size() - 2);
  cursor = 0;
  CHECK_THROWS_WITH_AS(read_frame(reader), doctest::Contains("truncated"),
                       std::runtime_error);
}

TEST_CASE("bounded queue: blocking push preserves order, drop-oldest counts") {
  BoundedQueue<int> q(3);
  q.push_blocking(1);
  q.push_blocking(2);
  q.push_blocking(3);
  CHECK(q.push_drop_oldest(4) == 1);  // evicts 1
  CHECK(*q.pop() == 2);
  CHECK(*q.pop() == 3);
  CHECK(*q.pop() == 4);
  q.close();
  CHECK_FALSE(q.pop().has_value());
}

TEST_CASE("socket source relays frames and ends on close") {
  const auto sock_path = temp_path("ingest.sock");
  const std::string endpoint = "unix:" + sock_path;
  const int listener = wf::net::listen_stream(endpoint);
  REQUIRE(listener >= 0);

  std::thread server([&] {
    const int conn = wf::net::accept_conn(listener);
    REQUIRE(conn >= 0);
    for (int i = 0; i < 5; ++i) {
      SampleBlock block;
      block.start_tick = static_cast<std::uint64_t>(i) * 50;
      block.channel_count = 1;
      block.frames = 50;
      block.data.assign(50, double(i));
      const auto bytes = encode_frame(block, StreamKind::ecg);
      REQUIRE(wf::net::write_all(conn, bytes.data(), bytes.size()));
    }
    wf::net::close_fd(conn);
  });

  StreamDescriptor desc{StreamKind::ecg, 1, 1000, "socket:" + endpoint};
  auto src = open_stream(desc);
  const auto blocks = drain_source(*src);
  server.join();
  wf::net::close_fd(listener);
  std::filesystem::remove(sock_path);

  REQUIRE(blocks.size() == 5);
  for (std::size_t i = 0; i < 5; ++i) {
    CHECK(blocks[i].start_tick == i * 50);
    CHECK(blocks[i].channel(0)[0] == doctest::Approx(double(i)));
  }
}

TEST_CASE("socket source reports unreachable endpoints") {
  StreamDescriptor desc{StreamKind::ecg, 1, 1000,
                        "socket:unix:/nonexistent/wf.sock"};
  CHECK_THROWS_WITH_AS(open_stream(desc), doctest::Contains("cannot reach"),
                       std::runtime_error);
}
