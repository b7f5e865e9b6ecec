#include "wf/mix/osc.hpp"

#include <arpa/inet.h>
#include <netdb.h>
#include <sys/socket.h>
#include <unistd.h>

#include <cstring>

namespace wf::mix {

std::vector<std::uint8_t> osc_float_message(std::string_view address,
                                            float value) {
  std::vector<std::uint8_t> out(address.begin(), address.end());
  out.push_back(0);
  while (out.size() % 4 != 0) out.push_back(0);
  const char tags[4] = {',', 'f', 0, 0};
  out.insert(out.end(), tags, tags + 4);
  std::uint32_t bits;
  std::memcpy(&bits, &value, 4);
  out.push_back(static_cast<std::uint8_t>((bits >> 24) & 0xFF));
  out.push_back(static_cast<std::uint8_t>((bits >> 16) & 0xFF));
  out.push_back(static_cast<std::uint8_t>((bits >> 8) & 0xFF));
  out.push_back(static_cast<std::uint8_t>(bits & 0xFF));
  return out;
}

OscSender::~OscSender() {
  if (fd_ >= 0) ::close(fd_);
}

bool OscSender::open(const std::string& host, int port) {
  addrinfo hints{};
  hints.ai_family = AF_UNSPEC;
  hints.ai_socktype = SOCK_DGRAM;
  addrinfo* res = nullptr;
  if (::getaddrinfo(host.c_str(), std::to_string(port).c_str(), &hints,
                    &res) != 0) {
    return false;
  }
  for (addrinfo* ai = res; ai != nullptr; ai = ai->ai_next) {
    fd_ = ::socket(ai->ai_family, ai->ai_socktype, ai->ai_protocol);
    if (fd_ < 0) continue;
    if (::connect(fd_, ai->ai_addr, ai->ai_addrlen) == 0) break;
    ::close(fd_);
    fd_ = -1;
  }
  ::freeaddrinfo(res);
  return fd_ >= 0;
}

void OscSender::send(const std::vector<std::uint8_t>& packet) {
  if (fd_ < 0) return;
  ::send(fd_, packet.data(), packet.size(), MSG_DONTWAIT);
}

void OscSender::send_gain(int channel_index, double gain) {
  send(osc_float_message("/witheflow/gain/" + std::to_string(channel_index),
                         static_cast<float>(gain)));
}

}  // namespace wf::mix
