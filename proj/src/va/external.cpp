#include "wf/va/external.hpp"

#include <cmath>
#include <cstring>
#include <vector>

#include "wf/net/socket.hpp"

namespace wf::va {

namespace {

void put_le32(std::vector<std::uint8_t>& out, std::uint32_t v) {
  out.push_back(static_cast<std::uint8_t>(v & 0xFF));
  out.push_back(static_cast<std::uint8_t>((v >> 8) & 0xFF));
  out.push_back(static_cast<std::uint8_t>((v >> 16) & 0xFF));
  out.push_back(static_cast<std::uint8_t>((v >> 24) & 0xFF));
}

float get_f32(const std::uint8_t* p) {
  const std::uint32_t bits = static_cast<std::uint32_t>(p[0]) |
                             (static_cast<std::uint32_t>(p[1]) << 8) |
                             (static_cast<std::uint32_t>(p[2]) << 16) |
                             (static_cast<std::uint32_t>(p[3]) << 24);
  float f;
  std::memcpy(&f, &bits, 4);
  return f;
}

}  // namespace

ExternalVaClient::ExternalVaClient(std::string endpoint)
    : endpoint_(std::move(endpoint)) {}

ExternalVaClient::~ExternalVaClient() { drop_connection(); }

bool ExternalVaClient::ensure_connected() {
  if (fd_ >= 0) return true;
  if (endpoint_.empty()) return false;
  fd_ = net::connect_stream(endpoint_);
  return fd_ >= 0;
}

void ExternalVaClient::drop_connection() {
  net::close_fd(fd_);
  fd_ = -1;
}

ExternalVaClient::Result ExternalVaClient::estimate(
    int channel_id, std::span<const double> window, float& valence,
    float& arousal) {
  if (!ensure_connected()) return Result::dead;

  std::vector<std::uint8_t> req;
  req.reserve(9 + window.size() * 4);
  put_le32(req, kVaMagic);
  req.push_back(static_cast<std::uint8_t>(channel_id));
  put_le32(req, static_cast<std::uint32_t>(window.size()));
  for (double s : window) {
    const auto f = static_cast<float>(s);
    std::uint32_t bits;
    std::memcpy(&bits, &f, 4);
    put_le32(req, bits);
  }
  if (!net::write_all(fd_, req.data(), req.size())) {
    drop_connection();
    return Result::dead;
  }

  if (!net::wait_readable(fd_, kVaTimeoutMs)) return Result::timeout;

  std::uint8_t resp[8];
  if (!net::read_exact(fd_, resp, sizeof(resp))) {
    drop_connection();
    return Result::dead;
  }
  const float v = get_f32(resp);
  const float a = get_f32(resp + 4);
  if (!std::isfinite(v) || !std::isfinite(a)) return Result::malformed;
  valence = v;
  arousal = a;
  return Result::ok;
}

}  // namespace wf::va
