#pragma once

#include <cstddef>
#include <string>

namespace wf::net {

// Endpoint syntax: "unix:/path/to.sock" or "host:port" (TCP).
// All functions return -1 / false on failure and never throw.

int connect_stream(const std::string& endpoint);
int listen_stream(const std::string& endpoint, int backlog = 4);
int accept_conn(int listen_fd);

bool read_exact(int fd, void* buf, std::size_t len);
bool write_all(int fd, const void* buf, std::size_t len);

// Poll for readability; true when data is available before the timeout.
bool wait_readable(int fd, int timeout_ms);

void close_fd(int fd);

}  // namespace wf::net
