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

#ifndef KALEIDO_TRANSPORT_H_
#define KALEIDO_TRANSPORT_H_

#include <chrono>
#include <condition_variable>
#include <deque>
#include <map>
#include <memory>
#include <mutex>
#include <string>

#include "absl/status/statusor.h"
#include "kaleido/audit.h"
#include "kaleido/frame.h"

namespace kaleido {

// Point-to-point frame delivery between protocol actors. Send may be called
// from any thread; each endpoint should have a single receiving thread.
class Transport {
 public:
  virtual ~Transport() = default;

  // The sender identity is frame.sender.
  virtual absl::Status Send(EndpointId to, const Frame& frame) = 0;

  // Next frame addressed to `self`, from any sender, in arrival order.
  virtual absl::StatusOr<Frame> Receive(EndpointId self,
                                        std::chrono::milliseconds timeout) = 0;

  virtual const std::shared_ptr<AuditLog>& audit() const = 0;
};

// Blocking FIFO of received frames (or delivery errors) for one endpoint.
class FrameMailbox {
 public:
  void Push(absl::StatusOr<Frame> frame);
  absl::StatusOr<Frame> Pop(EndpointId self, std::chrono::milliseconds timeout);

 private:
  std::mutex mu_;
  std::condition_variable cv_;
  std::deque<absl::StatusOr<Frame>> queue_;
};

// Thread-to-thread delivery inside one process. Frames are still serialized
// and parsed so both backends exercise the same wire format.
class InProcTransport : public Transport {
 public:
  explicit InProcTransport(std::shared_ptr<AuditLog> audit);

  absl::Status Send(EndpointId to, const Frame& frame) override;
  absl::StatusOr<Frame> Receive(EndpointId self,
                                std::chrono::milliseconds timeout) override;
  const std::shared_ptr<AuditLog>& audit() const override { return audit_; }

 private:
  FrameMailbox& MailboxFor(EndpointId id);

  std::shared_ptr<AuditLog> audit_;
  std::mutex mu_;
  std::map<EndpointId, std::unique_ptr<FrameMailbox>> mailboxes_;
};

enum class TransportBackend { kInProc, kTcp };

absl::StatusOr<TransportBackend> ParseTransportBackend(const std::string& name);

// Endpoint -> "host:port" listen address; port 0 picks an ephemeral port.
using EndpointAddresses = std::map<EndpointId, std::string>;

// A transport whose every frame lands in `audit`. `addresses` is only
// consulted by the TCP backend.
absl::StatusOr<std::unique_ptr<Transport>> MakeAuditedTransport(
    TransportBackend backend, std::shared_ptr<AuditLog> audit,
    const EndpointAddresses& addresses = {});

}  // namespace kaleido

#endif  // KALEIDO_TRANSPORT_H_
