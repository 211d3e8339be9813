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

#include "kaleido/audit.h"

#include <map>
#include <utility>

#include "absl/strings/str_cat.h"
#include "kaleido/status.h"

namespace kaleido {

void AuditLog::Record(AuditRecord record) {
  std::lock_guard<std::mutex> lock(mu_);
  records_.push_back(std::move(record));
}

std::vector<AuditRecord> AuditLog::Records() const {
  std::lock_guard<std::mutex> lock(mu_);
  return records_;
}

size_t AuditLog::size() const {
  std::lock_guard<std::mutex> lock(mu_);
  return records_.size();
}

void AuditLog::Clear() {
  std::lock_guard<std::mutex> lock(mu_);
  records_.clear();
}

TrafficSummary AuditLog::Summarize() const {
  std::lock_guard<std::mutex> lock(mu_);
  TrafficSummary summary;
  std::map<std::pair<EndpointId, EndpointId>, size_t> per_edge;
  for (const AuditRecord& r : records_) {
    const bool from_client = IsClientEndpoint(r.sender);
    const bool to_client = IsClientEndpoint(r.receiver);
    if (from_client && IsServerEndpoint(r.receiver)) {
      ++summary.upstream_frames;
      summary.upstream_bytes += r.bytes.size();
      ++per_edge[{r.sender, r.receiver}];
    } else if (IsServerEndpoint(r.sender) && to_client) {
      ++summary.downstream_frames;
      summary.downstream_bytes += r.bytes.size();
      ++per_edge[{r.sender, r.receiver}];
    } else if (IsServerEndpoint(r.sender) && IsServerEndpoint(r.receiver)) {
      ++summary.server_to_server_frames;
      summary.server_to_server_bytes += r.bytes.size();
    } else {
      ++summary.other_frames;
    }
  }
  for (const auto& [edge, count] : per_edge) {
    summary.rounds = std::max(summary.rounds, count);
  }
  return summary;
}

absl::Status AuditLog::CheckNonCollusion(Scheme scheme) const {
  std::lock_guard<std::mutex> lock(mu_);
  size_t seed_frames = 0;
  for (const AuditRecord& r : records_) {
    if (!IsServerEndpoint(r.sender) || !IsServerEndpoint(r.receiver)) continue;
    const bool whitelisted = scheme == Scheme::kKaleidoRnd &&
                             r.type == MessageType::kRndSeed &&
                             r.sender == kServer0Endpoint &&
                             r.receiver == kServer1Endpoint;
    if (!whitelisted) {
      return ProtocolError(absl::StrCat(
          "forbidden server-to-server frame ", EndpointName(r.sender), " -> ",
          EndpointName(r.receiver), " type ", static_cast<int>(r.type)));
    }
    ++seed_frames;
  }
  if (scheme == Scheme::kKaleidoRnd && seed_frames != 1) {
    return ProtocolError(absl::StrCat("expected exactly one seed frame, saw ",
                                      seed_frames));
  }
  return absl::OkStatus();
}

}  // namespace kaleido
