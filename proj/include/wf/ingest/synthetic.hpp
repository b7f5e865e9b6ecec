#pragma once

#include <cstdint>
#include <random>
#include <string>

namespace wf::ingest {

// Deterministic Gaussian source: mt19937_64 + explicit Box-Muller, so the
// sample stream is fully pinned by the seed (no reliance on
// std::normal_distribution internals).
class GaussianRng {
 public:
  explicit GaussianRng(std::uint64_t seed) : gen_(seed) {}

  double next();

 private:
  double uniform() {
    return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
  }

  std::mt19937_64 gen_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

// Mini-grammar: "sine <f>Hz amp <a> [noise <sigma>]"
//           or  "pulse <f>Hz amp <a> [noise <sigma>]"
// `pulse` emits a raised-cosine bump (24 ms wide) once per period, an ECG
// R-wave stand-in.
struct SyntheticSpec {
  enum class Wave { sine, pulse };

  Wave wave = Wave::sine;
  double freq_hz = 0.0;
  double amp = 0.0;
  double noise_sigma = 0.0;

  static SyntheticSpec parse(const std::string& text);

  // Noise-free waveform value at a sample tick.
  double value_at(std::uint64_t tick, int sample_rate_hz) const;
};

}  // namespace wf::ingest
