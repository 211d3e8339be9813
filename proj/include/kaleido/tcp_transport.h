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

#ifndef KALEIDO_TCP_TRANSPORT_H_
#define KALEIDO_TCP_TRANSPORT_H_

#include <atomic>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "absl/status/statusor.h"
#include "kaleido/transport.h"

namespace kaleido {

// One listening socket per local endpoint and one outbound connection per
// (sender, receiver) pair, opened on first use. Every accepted connection gets
// its own reader thread that parses frames off the stream into the receiving
// endpoint's mailbox.
class TcpTransport : public Transport {
 public:
  static absl::StatusOr<std::unique_ptr<TcpTransport>> Create(
      const EndpointAddresses& listen, std::shared_ptr<AuditLog> audit);

  ~TcpTransport() override;
  TcpTransport(const TcpTransport&) = delete;
  TcpTransport& operator=(const TcpTransport&) = delete;

  absl::Status Send(EndpointId to, const Frame& frame) override;
  absl::StatusOr<Frame> Receive(EndpointId self,
                                std::chrono::milliseconds timeout) override;
  const std::shared_ptr<AuditLog>& audit() const override { return audit_; }

  // "host:port" actually bound for an endpoint (resolves port 0).
  absl::StatusOr<std::string> BoundAddress(EndpointId id) const;

 private:
  struct Listener {
    int fd = -1;
    std::string host;
    int port = 0;
    std::unique_ptr<FrameMailbox> mailbox;
    std::thread accept_thread;
  };
  struct Connection {
    int fd = -1;
    std::mutex write_mu;
  };

  explicit TcpTransport(std::shared_ptr<AuditLog> audit)
      : audit_(std::move(audit)) {}

  void AcceptLoop(EndpointId id, Listener* listener);
  void ReadLoop(EndpointId id, int fd, FrameMailbox* mailbox);
  absl::StatusOr<Connection*> ConnectionFor(EndpointId from, EndpointId to);

  std::shared_ptr<AuditLog> audit_;
  std::map<EndpointId, std::unique_ptr<Listener>> listeners_;
  std::atomic<bool> stopping_{false};

  std::mutex conn_mu_;
  std::map<std::pair<EndpointId, EndpointId>, std::unique_ptr<Connection>>
      connections_;

  std::mutex reader_mu_;
  std::vector<int> reader_fds_;
  std::vector<std::thread> reader_threads_;
};

// Splits "host:port".
absl::StatusOr<std::pair<std::string, int>> ParseHostPort(const std::string& s);

}  // namespace kaleido

#endif  // KALEIDO_TCP_TRANSPORT_H_
