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

#ifndef KALEIDO_AUDIT_H_
#define KALEIDO_AUDIT_H_

#include <cstdint>
#include <mutex>
#include <vector>

#include "absl/status/status.h"
#include "kaleido/frame.h"
#include "kaleido/oracle.h"

namespace kaleido {

struct AuditRecord {
  EndpointId sender = 0;
  EndpointId receiver = 0;
  MessageType type = MessageType::kControl;
  std::vector<uint8_t> bytes;
};

struct TrafficSummary {
  size_t upstream_frames = 0;      // client -> server
  size_t downstream_frames = 0;    // server -> client
  size_t server_to_server_frames = 0;
  size_t other_frames = 0;
  size_t upstream_bytes = 0;
  size_t downstream_bytes = 0;
  size_t server_to_server_bytes = 0;
  // Largest number of frames on any single client->server or server->client
  // edge; 1 means every party spoke once in each direction.
  size_t rounds = 0;
};

// Every frame a transport carries, in send order. Thread-safe.
class AuditLog {
 public:
  void Record(AuditRecord record);
  std::vector<AuditRecord> Records() const;
  size_t size() const;
  void Clear();

  TrafficSummary Summarize() const;

  // Servers may not talk to each other, except for exactly one seed frame
  // from S0 to S1 under Kaleido-RND.
  absl::Status CheckNonCollusion(Scheme scheme) const;

 private:
  mutable std::mutex mu_;
  std::vector<AuditRecord> records_;
};

}  // namespace kaleido

#endif  // KALEIDO_AUDIT_H_
