#pragma once

#include <cstdint>
#include <span>
#include <string>

namespace wf::va {

// External estimator wire protocol over a local stream socket.
// Request (little-endian): u32 magic, u8 channel_id, u32 sample_count,
// float32 samples. Response: float32 valence, float32 arousal.
constexpr std::uint32_t kVaMagic = 0x57465641;  // "WFVA"
constexpr int kVaTimeoutMs = 200;

class ExternalVaClient {
 public:
  enum class Result {
    ok,
    timeout,    // no response in time; caller reuses the previous value
    dead,       // endpoint unreachable or connection lost
    malformed,  // short or garbage response
  };

  explicit ExternalVaClient(std::string endpoint);
  ~ExternalVaClient();

  ExternalVaClient(const ExternalVaClient&) = delete;
  ExternalVaClient& operator=(const ExternalVaClient&) = delete;

  Result estimate(int channel_id, std::span<const double> window,
                  float& valence, float& arousal);

 private:
  bool ensure_connected();
  void drop_connection();

  std::string endpoint_;
  int fd_ = -1;
};

}  // namespace wf::va
