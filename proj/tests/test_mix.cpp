#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "wf/mix/controller.hpp"
#include "wf/mix/osc.hpp"
#include "wf/session/commands.hpp"

using namespace wf::mix;

namespace {

FeatureSnapshot snapshot(double stress, double attention) {
  FeatureSnapshot s;
  s.eeg.attention = attention;
  s.eeg.relaxation = 1.0 - attention;
  s.eeg.valid = true;
  s.eeg.imputed = false;
  s.stress.si_norm = stress;
  s.stress.si_raw = 150.0;
  s.stress.valid = true;
  s.stress.imputed = false;
  s.va_dry.valence = 0.0;
  s.va_dry.arousal = 0.0;
  wf::va::VAPoint a, b;
  a.valence = 0.6;
  a.arousal = 0.7;
  a.channel_id = 1;
  b.valence = -0.5;
  b.arousal = -0.6;
  b.channel_id = 2;
  s.va_fx = {a, b};
  return s;
}

MixController make_controller(int fx = 2) {
  MixController::Config cfg;
  cfg.midi.num_channels = fx + 1;
  return MixController(wf::session::builtin_rulesets(), cfg);
}

}  // namespace

TEST_CASE("smoother: fixed point, asymptote, analytic one-pole step") {
  GainSmoother s(0.25);
  const std::vector<double> start{0.0, 0.0};
  s.step(start, 0.1);  // first step snaps

  SUBCASE("prev == target stays put") {
    const auto out = s.step(start, 0.1);
    CHECK(out[0] == 0.0);
    CHECK(out[1] == 0.0);
  }

  SUBCASE("huge dt lands on the target") {
    const auto out = s.step(std::vector<double>{1.0, 0.5}, 1e9);
    CHECK(out[0] == doctest::Approx(1.0));
    CHECK(out[1] == doctest::Approx(0.5));
  }

  SUBCASE("dt == tau gives 1 - 1/e") {
    const auto out = s.step(std::vector<double>{1.0, 1.0}, 0.25);
    CHECK(out[0] == doctest::Approx(1.0 - std::exp(-1.0)).epsilon(1e-12));
  }
}

TEST_CASE("smoothed gains never overshoot") {
  std::mt19937_64 gen(3);
  GainSmoother s(0.25);
  std::vector<double> prev{0.5, 0.5, 0.5};
  s.step(prev, 0.1);
  for (int i = 0; i < 500; ++i) {
    std::vector<double> target{oracle::uniform(gen, 0.0, 1.0),
                               oracle::uniform(gen, 0.0, 1.0),
                               oracle::uniform(gen, 0.0, 1.0)};
    const auto out = s.step(target, oracle::uniform(gen, 0.01, 1.0));
    for (std::size_t c = 0; c < out.size(); ++c) {
      const double lo = std::min(prev[c], target[c]);
      const double hi = std::max(prev[c], target[c]);
      CHECK(out[c] >= lo);
      CHECK(out[c] <= hi);
    }
    prev = out;
  }
}

TEST_CASE("gain quantization hits the endpoints and rounds half up") {
  CHECK(gain_to_cc(1.0) == 127);
  CHECK(gain_to_cc(0.0) == 0);
  CHECK(gain_to_cc(0.5) == 64);  // 63.5 rounds up
  CHECK(gain_to_cc(1.5) == 127);
  CHECK(gain_to_cc(-0.2) == 0);
}

TEST_CASE("strength mapping: endpoints and center detent") {
  CHECK(strength_from_cc(127) == doctest::Approx(1.0));
  CHECK(strength_from_cc(64) == doctest::Approx(0.0));
  CHECK(strength_from_cc(0) == doctest::Approx(-1.0));  // -64/63 clamps
  CHECK(strength_from_cc(96) == doctest::Approx(32.0 / 63.0));
}

TEST_CASE("delta suppression emits only changed quantized values") {
  MidiMap map;
  map.num_channels = 3;
  CcEmitter emitter(map);

  auto first = emitter.update(std::vector<double>{1.0, 0.5, 0.0});
  CHECK(first.size() == 3);  // everything changes from 'never sent'

  auto second = emitter.update(std::vector<double>{1.0, 0.5, 0.0});
  CHECK(second.empty());

  // below quantization resolution: still suppressed
  auto third = emitter.update(std::vector<double>{1.0, 0.5005, 0.0});
  CHECK(third.empty());

  auto fourth = emitter.update(std::vector<double>{1.0, 0.6, 0.0});
  REQUIRE(fourth.size() == 1);
  CHECK(fourth[0].cc == map.cc_for(1));
  CHECK(fourth[0].value == gain_to_cc(0.6));
}

TEST_CASE("wire encoding uses control-change status on the mapped channel") {
  MidiMap map;
  map.midi_channel = 3;
  map.num_channels = 1;
  CcEmitter emitter(map);
  const auto messages = emitter.update(std::vector<double>{1.0});
  const auto bytes = emitter.encode(messages);
  REQUIRE(bytes.size() == 3);
  CHECK(bytes[0] == 0xB2);
  CHECK(bytes[1] == 20);
  CHECK(bytes[2] == 127);
}

TEST_CASE("midi map validation rejects collisions and bad ranges") {
  MidiMap map;
  map.num_channels = 2;
  map.strength_cc = 21;  // collides with cc_base + 1
  CHECK_THROWS_AS(map.validate(), std::invalid_argument);
  map.strength_cc = 1;
  map.cc_base = 127;  // second channel would land on CC 128
  CHECK_THROWS_AS(map.validate(), std::invalid_argument);
  map.cc_base = 20;
  map.midi_channel = 17;
  CHECK_THROWS_AS(map.validate(), std::invalid_argument);
}

TEST_CASE("midi input parser handles plain and running status") {
  std::vector<std::pair<int, int>> seen;
  MidiInParser parser(1, [&](int cc, int value) { seen.push_back({cc, value}); });

  const std::uint8_t plain[] = {0xB0, 1, 127};
  parser.feed(plain);
  REQUIRE(seen.size() == 1);
  CHECK(seen[0] == std::pair{1, 127});

  const std::uint8_t running[] = {0xB0, 1, 64, 1, 0};
  parser.feed(running);
  REQUIRE(seen.size() == 3);
  CHECK(seen[2] == std::pair{1, 0});

  const std::uint8_t other_channel[] = {0xB5, 1, 99};
  parser.feed(other_channel);
  CHECK(seen.size() == 3);

  const std::uint8_t note_on[] = {0x90, 60, 100};
  parser.feed(note_on);
  CHECK(seen.size() == 3);
}

TEST_CASE("osc packets follow the 1.0 float layout") {
  const auto packet = osc_float_message("/witheflow/gain/1", 0.5f);
  // 17-char address + null -> padded to 20, 4 tag bytes, 4 float bytes
  REQUIRE(packet.size() == 28);
  CHECK(packet[0] == '/');
  CHECK(packet[17] == 0);
  CHECK(packet[20] == ',');
  CHECK(packet[21] == 'f');
  CHECK(packet[24] == 0x3F);  // 0.5f big-endian
  CHECK(packet[25] == 0x00);
}

TEST_CASE("sensor loss switches rulesets deterministically") {
  auto controller = make_controller();
  auto snap = snapshot(0.8, 0.8);

  auto r = controller.tick(snap, 0.1);
  CHECK(r.ruleset_name == "full");
  CHECK_FALSE(r.ruleset_switched);

  snap.sensors.eeg_active = false;
  r = controller.tick(snap, 0.1);
  CHECK(r.ruleset_name == "ecg-only");
  CHECK(r.ruleset_switched);

  snap.sensors.ecg_active = false;
  r = controller.tick(snap, 0.1);
  CHECK(r.ruleset_name == "audio-only");
  CHECK(r.ruleset_switched);

  // recovery is hysteresis-free
  snap.sensors.eeg_active = true;
  snap.sensors.ecg_active = true;
  r = controller.tick(snap, 0.1);
  CHECK(r.ruleset_name == "full");
}

TEST_CASE("eeg-only ruleset takes over when only ECG is lost") {
  auto controller = make_controller();
  auto snap = snapshot(0.5, 0.9);
  snap.sensors.ecg_active = false;
  const auto r = controller.tick(snap, 0.1);
  CHECK(r.ruleset_name == "eeg-only");
}

TEST_CASE("steady inputs converge the smoother onto the raw gains") {
  auto controller = make_controller();
  const auto snap = snapshot(0.9, 0.9);
  TickResult r;
  for (int i = 0; i < 10; ++i) r = controller.tick(snap, 0.1);
  REQUIRE(r.raw_gains.size() == r.smoothed_gains.size());
  for (std::size_t i = 0; i < r.raw_gains.size(); ++i) {
    CHECK(r.smoothed_gains[i] ==
          doctest::Approx(r.raw_gains[i]).epsilon(0.02));
  }
}

TEST_CASE("constant input goes quiet after convergence") {
  auto controller = make_controller();
  const auto snap = snapshot(0.2, 0.8);
  std::size_t messages_late = 0;
  for (int i = 0; i < 60; ++i) {
    const auto r = controller.tick(snap, 0.1);
    if (i >= 40) messages_late += r.midi.size();
  }
  CHECK(messages_late == 0);
}

TEST_CASE("strength control feeds the next tick") {
  auto controller = make_controller();
  auto snap = snapshot(0.9, 0.1);  // boost_far_any: both channels pass

  controller.on_strength_cc(64);  // center detent -> strength 0
  auto r = controller.tick(snap, 0.1);
  CHECK(r.strength == doctest::Approx(0.0));
  CHECK(r.raw_gains[1] == 1.0);
  CHECK(r.raw_gains[2] == 1.0);

  controller.on_strength_cc(127);
  r = controller.tick(snap, 0.1);
  CHECK(r.strength == doctest::Approx(1.0));
}

TEST_CASE("controller refuses rulesets that fail validation") {
  auto rulesets = wf::session::builtin_rulesets();
  rulesets[0].rules.pop_back();  // punch a hole in 'full'
  MixController::Config cfg;
  cfg.midi.num_channels = 2;
  CHECK_THROWS_WITH_AS(MixController(std::move(rulesets), cfg),
                       doctest::Contains("partition"), std::invalid_argument);
}
