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

#ifndef KALEIDO_PROTOCOL_H_
#define KALEIDO_PROTOCOL_H_

#include <array>
#include <chrono>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "absl/status/statusor.h"
#include "kaleido/audit.h"
#include "kaleido/client.h"
#include "kaleido/domain.h"
#include "kaleido/oracle.h"
#include "kaleido/server.h"
#include "kaleido/transport.h"

namespace kaleido {

// Every intermediate vector of one PSI execution.
struct SimulationResult {
  std::vector<BitVector> locals;
  std::vector<std::pair<ShareVector, ShareVector>> client_shares;
  std::array<ShareVector, 2> aggregated;
  std::array<EncodedVector, 2> encoded;
  EncodedVector combined;
  PsiResult psi;
};

// Runs all parties sequentially in the calling thread with no transport.
// Clients draw their shares from `random` in client order. `strategies`
// replaces the config-derived encoders.
absl::StatusOr<SimulationResult> Simulate(
    const RunConfig& config, std::span<const Relation> relations,
    const DomainCatalog& catalog, RandomSource& random,
    const std::optional<std::array<EncoderStrategy, 2>>& strategies = {});

using ClientRandomFactory =
    std::function<std::unique_ptr<RandomSource>(int client_id)>;

struct DistributedOptions {
  std::chrono::milliseconds timeout{30000};
  std::optional<std::array<EncoderStrategy, 2>> strategies;
};

struct RunReport {
  std::vector<ClientResult> clients;
  std::array<ServerResult, 2> servers;
  TrafficSummary traffic;
};

// Spawns two server actors and one actor per input on their own threads, all
// talking through `transport`. If any actor fails, the oracle endpoint sends
// a control frame to everyone so the rest stop waiting, and the first failure
// is returned.
absl::StatusOr<RunReport> RunDistributed(
    const RunConfig& config, std::span<const ClientInput> inputs,
    const DomainCatalog& catalog, Transport& transport,
    const ClientRandomFactory& client_random,
    const DistributedOptions& options = {});

}  // namespace kaleido

#endif  // KALEIDO_PROTOCOL_H_
