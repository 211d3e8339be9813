/*
 * Copyright 2026 The Kaleido PSI Authors.
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "kaleido/tcp_transport.h"

#include <arpa/inet.h>
#include <netdb.h>
#include <netinet/in.h>
#include <netinet/tcp.h>
#include <sys/socket.h>
#include <unistd.h>

#include <cerrno>
#include <cstring>

#include "absl/strings/numbers.h"
#include "absl/strings/str_cat.h"
#include "kaleido/status.h"

namespace kaleido {
namespace {

bool ReadExact(int fd, uint8_t* out, size_t n) {
  size_t got = 0;
  while (got < n) {
    ssize_t r = ::recv(fd, out + got, n - got, 0);
    if (r == 0) return false;
    if (r < 0) {
      if (errno == EINTR) continue;
      return false;
    }
    got += static_cast<size_t>(r);
  }
  return true;
}

bool WriteAll(int fd, const uint8_t* data, size_t n) {
  size_t sent = 0;
  while (sent < n) {
    ssize_t w = ::send(fd, data + sent, n - sent, MSG_NOSIGNAL);
    if (w < 0) {
      if (errno == EINTR) continue;
      return false;
    }
    sent += static_cast<size_t>(w);
  }
  return true;
}

absl::StatusOr<sockaddr_in> Resolve(const std::string& host, int port) {
  addrinfo hints{};
  hints.ai_family = AF_INET;
  hints.ai_socktype = SOCK_STREAM;
  addrinfo* result = nullptr;
  int rc = ::getaddrinfo(host.c_str(), nullptr, &hints, &result);
  if (rc != 0 || result == nullptr) {
    return TransportError(absl::StrCat("cannot resolve ", host, ": ",
                                       gai_strerror(rc)));
  }
  sockaddr_in addr = *reinterpret_cast<sockaddr_in*>(result->ai_addr);
  ::freeaddrinfo(result);
  addr.sin_port = htons(static_cast<uint16_t>(port));
  return addr;
}

}  // namespace

absl::StatusOr<std::pair<std::string, int>> ParseHostPort(const std::string& s) {
  size_t colon = s.rfind(':');
  int port = 0;
  if (colon == std::string::npos || colon == 0 ||
      !absl::SimpleAtoi(s.substr(colon + 1), &port) || port < 0 ||
      port > 65535) {
    return ParameterError(absl::StrCat("expected host:port, got '", s, "'"));
  }
  return std::make_pair(s.substr(0, colon), port);
}

absl::StatusOr<std::unique_ptr<TcpTransport>> TcpTransport::Create(
    const EndpointAddresses& listen, std::shared_ptr<AuditLog> audit) {
  std::unique_ptr<TcpTransport> transport(new TcpTransport(std::move(audit)));
  for (const auto& [id, address] : listen) {
    KALEIDO_ASSIGN_OR_RETURN(auto host_port, ParseHostPort(address));
    KALEIDO_ASSIGN_OR_RETURN(sockaddr_in addr,
                             Resolve(host_port.first, host_port.second));
    int fd = ::socket(AF_INET, SOCK_STREAM, 0);
    if (fd < 0) {
      return TransportError(absl::StrCat(EndpointName(id), ": socket: ",
                                         std::strerror(errno)));
    }
    int one = 1;
    ::setsockopt(fd, SOL_SOCKET, SO_REUSEADDR, &one, sizeof(one));
    if (::bind(fd, reinterpret_cast<sockaddr*>(&addr), sizeof(addr)) != 0 ||
        ::listen(fd, 64) != 0) {
      int err = errno;
      ::close(fd);
      return TransportError(absl::StrCat(EndpointName(id), " at ", address,
                                         ": ", std::strerror(err)));
    }
    sockaddr_in bound{};
    socklen_t len = sizeof(bound);
    ::getsockname(fd, reinterpret_cast<sockaddr*>(&bound), &len);

    auto listener = std::make_unique<Listener>();
    listener->fd = fd;
    listener->host = host_port.first;
    listener->port = ntohs(bound.sin_port);
    listener->mailbox = std::make_unique<FrameMailbox>();
    transport->listeners_.emplace(id, std::move(listener));
  }
  for (auto& [id, listener] : transport->listeners_) {
    Listener* raw = listener.get();
    EndpointId endpoint = id;
    raw->accept_thread = std::thread(
        [t = transport.get(), endpoint, raw] { t->AcceptLoop(endpoint, raw); });
  }
  return transport;
}

TcpTransport::~TcpTransport() {
  stopping_ = true;
  {
    std::lock_guard<std::mutex> lock(conn_mu_);
    for (auto& [edge, conn] : connections_) {
      ::shutdown(conn->fd, SHUT_RDWR);
      ::close(conn->fd);
    }
  }
  for (auto& [id, listener] : listeners_) {
    ::shutdown(listener->fd, SHUT_RDWR);
    ::close(listener->fd);
  }
  for (auto& [id, listener] : listeners_) {
    if (listener->accept_thread.joinable()) listener->accept_thread.join();
  }
  {
    std::lock_guard<std::mutex> lock(reader_mu_);
    for (int fd : reader_fds_) ::shutdown(fd, SHUT_RDWR);
  }
  for (std::thread& t : reader_threads_) {
    if (t.joinable()) t.join();
  }
  for (int fd : reader_fds_) ::close(fd);
}

void TcpTransport::AcceptLoop(EndpointId id, Listener* listener) {
  while (!stopping_) {
    int fd = ::accept(listener->fd, nullptr, nullptr);
    if (fd < 0) {
      if (errno == EINTR) continue;
      return;
    }
    std::lock_guard<std::mutex> lock(reader_mu_);
    if (stopping_) {
      ::close(fd);
      return;
    }
    reader_fds_.push_back(fd);
    FrameMailbox* mailbox = listener->mailbox.get();
    reader_threads_.emplace_back(
        [this, id, fd, mailbox] { ReadLoop(id, fd, mailbox); });
  }
}

void TcpTransport::ReadLoop(EndpointId id, int fd, FrameMailbox* mailbox) {
  std::vector<uint8_t> bytes;
  while (!stopping_) {
    bytes.assign(kFrameHeaderSize, 0);
    if (!ReadExact(fd, bytes.data(), kFrameHeaderSize)) return;
    absl::StatusOr<FrameHeader> header = DecodeFrameHeader(bytes);
    if (!header.ok()) {
      mailbox->Push(header.status());
      return;
    }
    for (uint32_t i = 0; i < header->element_count; ++i) {
      uint8_t prefix[2];
      if (!ReadExact(fd, prefix, 2)) {
        mailbox->Push(FramingError(absl::StrCat(
            EndpointName(id), ": connection closed inside a frame")));
        return;
      }
      size_t len = (size_t{prefix[0]} << 8) | prefix[1];
      size_t at = bytes.size();
      bytes.push_back(prefix[0]);
      bytes.push_back(prefix[1]);
      bytes.resize(at + 2 + len);
      if (!ReadExact(fd, bytes.data() + at + 2, len)) {
        mailbox->Push(FramingError(absl::StrCat(
            EndpointName(id), ": connection closed inside a frame")));
        return;
      }
    }
    mailbox->Push(DecodeFrame(bytes));
  }
}

absl::StatusOr<TcpTransport::Connection*> TcpTransport::ConnectionFor(
    EndpointId from, EndpointId to) {
  std::lock_guard<std::mutex> lock(conn_mu_);
  auto& slot = connections_[{from, to}];
  if (slot != nullptr) return slot.get();

  auto it = listeners_.find(to);
  if (it == listeners_.end()) {
    connections_.erase({from, to});
    return TransportError(absl::StrCat("no address configured for ",
                                       EndpointName(to)));
  }
  const Listener& target = *it->second;
  KALEIDO_ASSIGN_OR_RETURN(sockaddr_in addr, Resolve(target.host, target.port));
  int fd = ::socket(AF_INET, SOCK_STREAM, 0);
  if (fd < 0 ||
      ::connect(fd, reinterpret_cast<sockaddr*>(&addr), sizeof(addr)) != 0) {
    int err = errno;
    if (fd >= 0) ::close(fd);
    connections_.erase({from, to});
    return TransportError(absl::StrCat(EndpointName(from), " -> ",
                                       EndpointName(to), " at ", target.host,
                                       ":", target.port, ": ",
                                       std::strerror(err)));
  }
  int one = 1;
  ::setsockopt(fd, IPPROTO_TCP, TCP_NODELAY, &one, sizeof(one));
  slot = std::make_unique<Connection>();
  slot->fd = fd;
  return slot.get();
}

absl::Status TcpTransport::Send(EndpointId to, const Frame& frame) {
  KALEIDO_ASSIGN_OR_RETURN(std::vector<uint8_t> bytes, EncodeFrame(frame));
  KALEIDO_ASSIGN_OR_RETURN(Connection * conn, ConnectionFor(frame.sender, to));
  {
    std::lock_guard<std::mutex> lock(conn->write_mu);
    if (!WriteAll(conn->fd, bytes.data(), bytes.size())) {
      return TransportError(absl::StrCat(EndpointName(frame.sender), " -> ",
                                         EndpointName(to), ": ",
                                         std::strerror(errno)));
    }
  }
  audit_->Record(AuditRecord{.sender = frame.sender,
                             .receiver = to,
                             .type = frame.type,
                             .bytes = std::move(bytes)});
  return absl::OkStatus();
}

absl::StatusOr<Frame> TcpTransport::Receive(EndpointId self,
                                            std::chrono::milliseconds timeout) {
  auto it = listeners_.find(self);
  if (it == listeners_.end()) {
    return TransportError(absl::StrCat(EndpointName(self),
                                       " has no listening address"));
  }
  return it->second->mailbox->Pop(self, timeout);
}

absl::StatusOr<std::string> TcpTransport::BoundAddress(EndpointId id) const {
  auto it = listeners_.find(id);
  if (it == listeners_.end()) {
    return TransportError(absl::StrCat(EndpointName(id), " is not bound"));
  }
  return absl::StrCat(it->second->host, ":", it->second->port);
}

}  // namespace kaleido
