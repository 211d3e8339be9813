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

#include "kaleido/transport.h"

#include <utility>

#include "absl/strings/str_cat.h"
#include "kaleido/status.h"
#include "kaleido/tcp_transport.h"

namespace kaleido {

void FrameMailbox::Push(absl::StatusOr<Frame> frame) {
  {
    std::lock_guard<std::mutex> lock(mu_);
    queue_.push_back(std::move(frame));
  }
  cv_.notify_one();
}

absl::StatusOr<Frame> FrameMailbox::Pop(EndpointId self,
                                        std::chrono::milliseconds timeout) {
  std::unique_lock<std::mutex> lock(mu_);
  if (!cv_.wait_for(lock, timeout, [this] { return !queue_.empty(); })) {
    return absl::DeadlineExceededError(
        absl::StrCat(EndpointName(self), ": no frame within ",
                     timeout.count(), " ms"));
  }
  absl::StatusOr<Frame> out = std::move(queue_.front());
  queue_.pop_front();
  return out;
}

InProcTransport::InProcTransport(std::shared_ptr<AuditLog> audit)
    : audit_(std::move(audit)) {}

FrameMailbox& InProcTransport::MailboxFor(EndpointId id) {
  std::lock_guard<std::mutex> lock(mu_);
  auto& slot = mailboxes_[id];
  if (slot == nullptr) slot = std::make_unique<FrameMailbox>();
  return *slot;
}

absl::Status InProcTransport::Send(EndpointId to, const Frame& frame) {
  KALEIDO_ASSIGN_OR_RETURN(std::vector<uint8_t> bytes, EncodeFrame(frame));
  absl::StatusOr<Frame> delivered = DecodeFrame(bytes);
  audit_->Record(AuditRecord{.sender = frame.sender,
                             .receiver = to,
                             .type = frame.type,
                             .bytes = std::move(bytes)});
  MailboxFor(to).Push(std::move(delivered));
  return absl::OkStatus();
}

absl::StatusOr<Frame> InProcTransport::Receive(
    EndpointId self, std::chrono::milliseconds timeout) {
  return MailboxFor(self).Pop(self, timeout);
}

absl::StatusOr<TransportBackend> ParseTransportBackend(const std::string& name) {
  if (name == "inproc") return TransportBackend::kInProc;
  if (name == "tcp") return TransportBackend::kTcp;
  return ParameterError(
      absl::StrCat("unknown transport '", name, "' (expected inproc, tcp)"));
}

absl::StatusOr<std::unique_ptr<Transport>> MakeAuditedTransport(
    TransportBackend backend, std::shared_ptr<AuditLog> audit,
    const EndpointAddresses& addresses) {
  if (audit == nullptr) audit = std::make_shared<AuditLog>();
  switch (backend) {
    case TransportBackend::kInProc:
      return std::unique_ptr<Transport>(
          std::make_unique<InProcTransport>(std::move(audit)));
    case TransportBackend::kTcp: {
      KALEIDO_ASSIGN_OR_RETURN(auto tcp,
                               TcpTransport::Create(addresses, std::move(audit)));
      return std::unique_ptr<Transport>(std::move(tcp));
    }
  }
  return ParameterError("unknown transport backend");
}

}  // namespace kaleido
