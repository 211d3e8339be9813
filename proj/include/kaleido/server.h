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

#ifndef KALEIDO_SERVER_H_
#define KALEIDO_SERVER_H_

#include <chrono>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "absl/status/statusor.h"
#include "kaleido/bigint.h"
#include "kaleido/group.h"
#include "kaleido/oracle.h"
#include "kaleido/prf.h"
#include "kaleido/sharing.h"
#include "kaleido/transport.h"

namespace kaleido {

// A server's exponentiated vector U^b, or the client-side product U. Every
// element is a unit of Z_q, so it lies in [1, q-1].
struct EncodedVector {
  int server_index = -1;  // -1 for the combined vector
  std::vector<BigInt> elements;

  size_t size() const { return elements.size(); }
  friend bool operator==(const EncodedVector&, const EncodedVector&) = default;
};

// How a server picks the base for each position.
struct PrismEncoder {
  BigInt generator;
};
struct KaleidoRndEncoder {
  uint64_t seed = 0;
};
struct KaleidoAesEncoder {
  std::shared_ptr<const Prf> prf;
};
// Explicit per-position bases, used verbatim with no order check.
struct InjectedEncoder {
  std::vector<BigInt> generators;
};

using EncoderStrategy =
    std::variant<PrismEncoder, KaleidoRndEncoder, KaleidoAesEncoder,
                 InjectedEncoder>;

// Pos-th element of the shared Kaleido-RND stream.
uint64_t RndStreamValue(uint64_t seed, uint64_t pos);

// V^b[i] = (sum_j shares_j[i] - m_share) mod p.
absl::StatusOr<ShareVector> Aggregate(std::span<const ShareVector> shares,
                                      const BigInt& m_share,
                                      const GroupParams& params);

// Base for position `pos`. For the randomized encoders the raw value r is
// mapped to the scan start (r mod (q - 2)) + 2 and then advanced to the first
// element of order p.
absl::StatusOr<BigInt> DeriveGenerator(const EncoderStrategy& strategy,
                                       uint64_t pos, const GroupParams& params);

// U^b[i] = g_i ^ V^b[i] mod q.
absl::StatusOr<EncodedVector> Encode(const ShareVector& aggregated,
                                     const EncoderStrategy& strategy,
                                     const GroupParams& params);

// Builds the strategy a server config asks for. Server 1 under Kaleido-RND
// passes the seed it received from server 0.
absl::StatusOr<EncoderStrategy> StrategyFor(
    const ServerConfig& config, std::optional<uint64_t> received_seed = {});

struct StageTiming {
  std::string stage;
  std::chrono::nanoseconds elapsed{0};
};

struct ServerResult {
  int server_index = 0;
  ShareVector aggregated;
  EncodedVector encoded;
  std::vector<StageTiming> timings;  // Receive, Aggregate, Encode, Broadcast
};

struct ServerRunOptions {
  std::chrono::milliseconds timeout{30000};
  // Overrides the strategy derived from the config (test hook for injected
  // generators).
  std::optional<EncoderStrategy> strategy;
};

// One server actor: collect one share vector from each of the m clients,
// aggregate, encode, and send U^b to every client. Under Kaleido-RND, server 0
// first sends its seed to server 1 and server 1 waits for it.
absl::StatusOr<ServerResult> ServerRun(const ServerConfig& config,
                                       Transport& transport,
                                       const ServerRunOptions& options = {});

}  // namespace kaleido

#endif  // KALEIDO_SERVER_H_
