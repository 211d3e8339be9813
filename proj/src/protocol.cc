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

#include "kaleido/protocol.h"

#include <mutex>
#include <thread>

#include "absl/strings/str_cat.h"
#include "kaleido/status.h"

namespace kaleido {

absl::StatusOr<SimulationResult> Simulate(
    const RunConfig& config, std::span<const Relation> relations,
    const DomainCatalog& catalog, RandomSource& random,
    const std::optional<std::array<EncoderStrategy, 2>>& strategies) {
  if (static_cast<int>(relations.size()) != config.m) {
    return ParameterError(absl::StrCat("config expects ", config.m,
                                       " clients, got ", relations.size()));
  }
  if (catalog.size() != config.n) {
    return ParameterError("domain size does not match config");
  }
  SimulationResult result;
  std::array<std::vector<ShareVector>, 2> inbox;
  for (const Relation& relation : relations) {
    KALEIDO_ASSIGN_OR_RETURN(BitVector bits, Vectorize(relation, catalog));
    KALEIDO_ASSIGN_OR_RETURN(auto shares,
                             SplitVector(bits, config.params, random));
    inbox[0].push_back(shares.first);
    inbox[1].push_back(shares.second);
    result.locals.push_back(std::move(bits));
    result.client_shares.push_back(std::move(shares));
  }
  for (int b = 0; b < 2; ++b) {
    KALEIDO_ASSIGN_OR_RETURN(
        result.aggregated[b],
        Aggregate(inbox[b], config.m_shares[b], config.params));
    EncoderStrategy strategy;
    if (strategies.has_value()) {
      strategy = (*strategies)[b];
    } else {
      // Server 1's seed is what server 0 would have sent it.
      KALEIDO_ASSIGN_OR_RETURN(
          strategy, StrategyFor(ServerProjection(config, b), config.rnd_seed));
    }
    KALEIDO_ASSIGN_OR_RETURN(
        result.encoded[b],
        Encode(result.aggregated[b], strategy, config.params));
  }
  KALEIDO_ASSIGN_OR_RETURN(
      result.combined,
      Combine(result.encoded[0], result.encoded[1], config.params));
  KALEIDO_ASSIGN_OR_RETURN(result.psi, ExtractPsi(result.combined, catalog));
  return result;
}

absl::StatusOr<RunReport> RunDistributed(
    const RunConfig& config, std::span<const ClientInput> inputs,
    const DomainCatalog& catalog, Transport& transport,
    const ClientRandomFactory& client_random,
    const DistributedOptions& options) {
  if (static_cast<int>(inputs.size()) != config.m) {
    return ParameterError(absl::StrCat("config expects ", config.m,
                                       " clients, got ", inputs.size()));
  }
  if (config.m > static_cast<int>(kMaxClientEndpoint) + 1) {
    return ParameterError("too many clients for the endpoint id space");
  }

  std::mutex mu;
  std::optional<absl::Status> first_error;
  bool aborted = false;
  auto fail = [&](const absl::Status& status) {
    std::lock_guard<std::mutex> lock(mu);
    if (!first_error.has_value()) first_error = status;
    if (aborted) return;
    aborted = true;
    Frame abort{.type = MessageType::kControl,
                .sender = kOracleEndpoint,
                .elements = {}};
    transport.Send(kServer0Endpoint, abort).IgnoreError();
    transport.Send(kServer1Endpoint, abort).IgnoreError();
    for (int c = 0; c < config.m; ++c) {
      transport.Send(static_cast<EndpointId>(c), abort).IgnoreError();
    }
  };

  RunReport report;
  report.clients.resize(inputs.size());
  std::vector<std::thread> actors;
  for (int b = 0; b < 2; ++b) {
    actors.emplace_back([&, b] {
      ServerRunOptions server_options;
      server_options.timeout = options.timeout;
      if (options.strategies.has_value()) {
        server_options.strategy = (*options.strategies)[b];
      }
      absl::StatusOr<ServerResult> result =
          ServerRun(ServerProjection(config, b), transport, server_options);
      if (!result.ok()) {
        fail(result.status());
        return;
      }
      report.servers[b] = *std::move(result);
    });
  }
  for (int c = 0; c < config.m; ++c) {
    actors.emplace_back([&, c] {
      std::unique_ptr<RandomSource> random = client_random(c);
      absl::StatusOr<ClientResult> result =
          ClientRun(inputs[c], catalog, ClientProjection(config, c), transport,
                    *random, options.timeout);
      if (!result.ok()) {
        fail(result.status());
        return;
      }
      report.clients[c] = *std::move(result);
    });
  }
  for (std::thread& t : actors) t.join();
  if (first_error.has_value()) return *first_error;

  report.traffic = transport.audit()->Summarize();
  return report;
}

}  // namespace kaleido
