#include "wf/ingest/synthetic.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace wf::ingest {

double GaussianRng::next() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  double u1 = uniform();
  while (u1 <= 1e-300) u1 = uniform();
  const double u2 = uniform();
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double th = 2.0 * std::numbers::pi * u2;
  spare_ = r * std::sin(th);
  has_spare_ = true;
  return r * std::cos(th);
}

SyntheticSpec SyntheticSpec::parse(const std::string& text) {
  std::istringstream in(text);
  std::string wave, hz, key;
  SyntheticSpec spec;
  if (!(in >> wave >> hz)) {
    throw std::invalid_argument("synthetic: expected '<wave> <f>Hz amp <a>'");
  }
  if (wave == "sine") {
    spec.wave = Wave::sine;
  } else if (wave == "pulse") {
    spec.wave = Wave::pulse;
  } else {
    throw std::invalid_argument("synthetic: unknown waveform '" + wave + "'");
  }
  if (hz.size() < 3 || hz.substr(hz.size() - 2) != "Hz") {
    throw std::invalid_argument("synthetic: frequency must end in 'Hz'");
  }
  try {
    spec.freq_hz = std::stod(hz.substr(0, hz.size() - 2));
  } catch (const std::exception&) {
    throw std::invalid_argument("synthetic: bad frequency '" + hz + "'");
  }
  if (!(in >> key) || key != "amp" || !(in >> spec.amp)) {
    throw std::invalid_argument("synthetic: expected 'amp <a>'");
  }
  if (in >> key) {
    if (key != "noise" || !(in >> spec.noise_sigma)) {
      throw std::invalid_argument("synthetic: expected 'noise <sigma>'");
    }
  }
  if (spec.freq_hz < 0.0 || spec.noise_sigma < 0.0) {
    throw std::invalid_argument("synthetic: negative frequency or noise");
  }
  return spec;
}

double SyntheticSpec::value_at(std::uint64_t tick, int sample_rate_hz) const {
  const double t = static_cast<double>(tick);
  const double rate = static_cast<double>(sample_rate_hz);
  if (wave == Wave::sine) {
    if (freq_hz == 0.0 || amp == 0.0) return 0.0;
    return amp * std::sin(2.0 * std::numbers::pi * freq_hz * t / rate);
  }
  // pulse
  if (freq_hz <= 0.0 || amp == 0.0) return 0.0;
  const double period = rate / freq_hz;
  const double k = std::round(t / period);
  const double center = std::round(k * period);
  const double d = t - center;
  const double half_width = 0.012 * rate;  // 12 ms each side
  if (std::abs(d) > half_width) return 0.0;
  return amp * 0.5 *
         (1.0 + std::cos(std::numbers::pi * d / half_width));
}

}  // namespace wf::ingest
