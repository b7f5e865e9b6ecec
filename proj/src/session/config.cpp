#include "wf/session/config.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace wf::session {

namespace {

std::string trim(const std::string& s) {
  const auto begin = s.find_first_not_of(" \t\r");
  if (begin == std::string::npos) return "";
  const auto end = s.find_last_not_of(" \t\r");
  return s.substr(begin, end - begin + 1);
}

std::string unquote(const std::string& s) {
  if (s.size() >= 2 && s.front() == '"' && s.back() == '"') {
    return s.substr(1, s.size() - 2);
  }
  return s;
}

double parse_double(const std::string& key, const std::string& value) {
  try {
    std::size_t used = 0;
    const double v = std::stod(value, &used);
    if (used != value.size()) throw std::invalid_argument(value);
    return v;
  } catch (const std::exception&) {
    throw std::invalid_argument("config: bad number for '" + key + "': " + value);
  }
}

long long parse_int(const std::string& key, const std::string& value) {
  try {
    std::size_t used = 0;
    const long long v = std::stoll(value, &used);
    if (used != value.size()) throw std::invalid_argument(value);
    return v;
  } catch (const std::exception&) {
    throw std::invalid_argument("config: bad integer for '" + key + "': " + value);
  }
}

bool parse_bool(const std::string& key, const std::string& value) {
  if (value == "true") return true;
  if (value == "false") return false;
  throw std::invalid_argument("config: bad bool for '" + key +
                              "' (use true/false): " + value);
}

// "streams.audio.<i>.source" -> i, or nullopt
std::optional<int> audio_stream_index(const std::string& key) {
  const std::string prefix = "streams.audio.";
  const std::string suffix = ".source";
  if (key.rfind(prefix, 0) != 0 || key.size() <= prefix.size() + suffix.size() ||
      key.compare(key.size() - suffix.size(), suffix.size(), suffix) != 0) {
    return std::nullopt;
  }
  const std::string mid =
      key.substr(prefix.size(), key.size() - prefix.size() - suffix.size());
  try {
    std::size_t used = 0;
    const int idx = std::stoi(mid, &used);
    if (used != mid.size() || idx < 0) return std::nullopt;
    return idx;
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

std::optional<int> va_override_index(const std::string& key) {
  const std::string prefix = "audio.va_override.";
  if (key.rfind(prefix, 0) != 0) return std::nullopt;
  const std::string mid = key.substr(prefix.size());
  try {
    std::size_t used = 0;
    const int idx = std::stoi(mid, &used);
    if (used != mid.size() || idx < 0) return std::nullopt;
    return idx;
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

}  // namespace

void Config::apply(const std::string& key, const std::string& value) {
  if (key == "session.fx_channels") {
    fx_channels = static_cast<int>(parse_int(key, value));
  } else if (key == "session.duration_s") {
    duration_s = parse_double(key, value);
  } else if (key == "session.seed") {
    seed = static_cast<std::uint64_t>(parse_int(key, value));
  } else if (key == "session.log") {
    log_path = unquote(value);
  } else if (key == "session.headless") {
    headless = parse_bool(key, value);
  } else if (key == "session.rulesets") {
    ruleset_paths.clear();
    std::istringstream in(unquote(value));
    std::string item;
    while (std::getline(in, item, ',')) {
      const std::string p = trim(item);
      if (!p.empty()) ruleset_paths.push_back(p);
    }
  } else if (key == "streams.eeg.source") {
    eeg_source = unquote(value);
  } else if (key == "streams.ecg.source") {
    ecg_source = unquote(value);
  } else if (auto idx = audio_stream_index(key)) {
    audio_sources[*idx] = unquote(value);
  } else if (key == "eeg.hop_samples") {
    eeg_hop_samples = static_cast<std::size_t>(parse_int(key, value));
  } else if (key == "eeg.theta_flat_uv") {
    eeg_theta_flat_uv = parse_double(key, value);
  } else if (key == "eeg.t_dead_windows") {
    eeg_t_dead_windows = static_cast<int>(parse_int(key, value));
  } else if (key == "ecg.bin_ms") {
    ecg_bin_ms = parse_double(key, value);
  } else if (key == "ecg.mxdmn_floor_s") {
    ecg_mxdmn_floor_s = parse_double(key, value);
  } else if (key == "ecg.min_intervals") {
    ecg_min_intervals = static_cast<int>(parse_int(key, value));
  } else if (key == "ecg.calibration.median") {
    ecg_cal_median = parse_double(key, value);
  } else if (key == "ecg.calibration.spread") {
    ecg_cal_spread = parse_double(key, value);
  } else if (key == "audio.hop_s") {
    audio_hop_s = parse_double(key, value);
  } else if (key == "audio.estimator") {
    audio_estimator = unquote(value);
  } else if (key == "audio.external_endpoint") {
    audio_external_endpoint = unquote(value);
  } else if (auto vidx = va_override_index(key)) {
    std::istringstream in(unquote(value));
    double v = 0.0, a = 0.0;
    char sep = 0;
    if (!(in >> v >> sep >> a) || sep != ',') {
      throw std::invalid_argument("config: '" + key +
                                  "' expects 'valence,arousal'");
    }
    audio_va_override[*vidx] = {v, a};
  } else if (key == "rules.tau") {
    rules_tau = parse_double(key, value);
  } else if (key == "rules.g_floor") {
    rules_g_floor = parse_double(key, value);
  } else if (key == "mix.tick_ms") {
    mix_tick_ms = static_cast<int>(parse_int(key, value));
  } else if (key == "mix.strength") {
    mix_strength = parse_double(key, value);
  } else if (key == "mix.smoothing_tau_s") {
    mix_smoothing_tau_s = parse_double(key, value);
  } else if (key == "midi.port") {
    midi_port = unquote(value);
  } else if (key == "midi.in_port") {
    midi_in_port = unquote(value);
  } else if (key == "midi.channel") {
    midi_channel = static_cast<int>(parse_int(key, value));
  } else if (key == "midi.cc_per_fx") {
    midi_cc_base = static_cast<int>(parse_int(key, value));
  } else if (key == "midi.strength_cc") {
    midi_strength_cc = static_cast<int>(parse_int(key, value));
  } else if (key == "osc.enabled") {
    osc_enabled = parse_bool(key, value);
  } else if (key == "osc.host") {
    osc_host = unquote(value);
  } else if (key == "osc.port") {
    osc_port = static_cast<int>(parse_int(key, value));
  } else {
    throw std::invalid_argument("config: unknown key '" + key + "'");
  }
}

Config Config::from_text(const std::string& text,
                         const std::string& source_name) {
  Config cfg;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string stripped = trim(line);
    if (stripped.empty() || stripped[0] == '#') continue;
    const auto eq = stripped.find('=');
    if (eq == std::string::npos) {
      throw std::invalid_argument(source_name + ":" + std::to_string(lineno) +
                                  ": expected 'key = value'");
    }
    const std::string key = trim(stripped.substr(0, eq));
    const std::string value = trim(stripped.substr(eq + 1));
    try {
      cfg.apply(key, value);
    } catch (const std::invalid_argument& e) {
      throw std::invalid_argument(source_name + ":" + std::to_string(lineno) +
                                  ": " + e.what());
    }
  }
  cfg.validate();
  return cfg;
}

Config Config::from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("config: cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return from_text(buf.str(), path);
}

void Config::validate() const {
  if (fx_channels < 1) {
    throw std::invalid_argument("config: session.fx_channels must be >= 1");
  }
  if (duration_s <= 0.0) {
    throw std::invalid_argument("config: session.duration_s must be positive");
  }
  if (audio_estimator != "builtin" && audio_estimator != "external") {
    throw std::invalid_argument(
        "config: audio.estimator must be 'builtin' or 'external'");
  }
  if (mix_tick_ms < 50 || mix_tick_ms % 50 != 0) {
    throw std::invalid_argument(
        "config: mix.tick_ms must be a positive multiple of 50");
  }
  if (eeg_hop_samples == 0) {
    throw std::invalid_argument("config: eeg.hop_samples must be positive");
  }
  if (ecg_cal_spread <= 0.0) {
    throw std::invalid_argument("config: ecg.calibration.spread must be positive");
  }
  for (const auto& [idx, unused] : audio_sources) {
    if (idx > fx_channels) {
      throw std::invalid_argument(
          "config: streams.audio." + std::to_string(idx) +
          ".source exceeds session.fx_channels");
    }
  }
}

std::string Config::audio_source(int channel) const {
  if (const auto it = audio_sources.find(channel); it != audio_sources.end()) {
    return it->second;
  }
  // Seeded defaults spread the FX across VA space.
  if (channel == 0) return "synthetic:sine 220Hz amp 0.4 noise 0.01";
  switch (channel % 3) {
    case 1: return "synthetic:sine 880Hz amp 0.35 noise 0.02";
    case 2: return "synthetic:sine 0Hz amp 0 noise 0.15";
    default: return "synthetic:sine 110Hz amp 0.5 noise 0.005";
  }
}

std::optional<std::pair<double, double>> Config::va_override(
    int channel) const {
  if (const auto it = audio_va_override.find(channel);
      it != audio_va_override.end()) {
    return it->second;
  }
  return std::nullopt;
}

std::uint64_t Config::stream_seed(int stream_index) const {
  return seed ^ ((static_cast<std::uint64_t>(stream_index) + 1) *
                 0x9E3779B97F4A7C15ULL);
}

}  // namespace wf::session
