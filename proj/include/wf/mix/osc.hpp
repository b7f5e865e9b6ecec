#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace wf::mix {

// OSC 1.0 message with a single float argument: padded address, ",f"
// typetag, big-endian float32.
std::vector<std::uint8_t> osc_float_message(std::string_view address,
                                            float value);

// Fire-and-forget UDP mirror of the gain vector at /witheflow/gain/<i>.
class OscSender {
 public:
  OscSender() = default;
  ~OscSender();

  OscSender(const OscSender&) = delete;
  OscSender& operator=(const OscSender&) = delete;

  bool open(const std::string& host, int port);
  bool is_open() const { return fd_ >= 0; }
  void send(const std::vector<std::uint8_t>& packet);
  void send_gain(int channel_index, double gain);

 private:
  int fd_ = -1;
};

}  // namespace wf::mix
