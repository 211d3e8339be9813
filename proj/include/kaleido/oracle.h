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

#ifndef KALEIDO_ORACLE_H_
#define KALEIDO_ORACLE_H_

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>
#include <utility>

#include "absl/status/statusor.h"
#include "kaleido/bigint.h"
#include "kaleido/group.h"
#include "kaleido/prf.h"
#include "kaleido/random.h"

namespace kaleido {

enum class Scheme {
  kPrism,       // one fixed generator for every position
  kKaleidoRnd,  // per-position generators from a seed the servers share
  kKaleidoAes,  // per-position generators from AES-128 under a shared key
};

std::string_view SchemeName(Scheme scheme);
absl::StatusOr<Scheme> ParseScheme(std::string_view name);

// Everything the initiator decides for one PSI execution. Only the oracle
// ever holds the whole thing; servers and clients get projections.
struct RunConfig {
  GroupParams params;
  Scheme scheme = Scheme::kPrism;
  int m = 0;
  size_t n = 0;
  std::array<BigInt, 2> m_shares;
  ProtocolIv protocol_iv;
  std::optional<PrfKey> prf_key;           // Kaleido-AES
  std::optional<BigInt> fixed_generator;   // Prism
  std::optional<uint64_t> rnd_seed;        // Kaleido-RND
};

// What server b receives. `rnd_seed` is only handed to server 0, which
// forwards it to server 1 in a single seed frame.
struct ServerConfig {
  int index = 0;
  GroupParams params;
  Scheme scheme = Scheme::kPrism;
  int m = 0;
  size_t n = 0;
  BigInt m_share;
  ProtocolIv protocol_iv;
  std::optional<PrfKey> prf_key;
  std::optional<BigInt> fixed_generator;
  std::optional<uint64_t> rnd_seed;
};

// What a client receives: the public groups and the domain size. There is no
// field for the generator, the PRF key, the RND seed or m.
struct ClientConfig {
  int client_id = 0;
  GroupParams params;
  size_t n = 0;
};

// Values pinned by a config file instead of being sampled.
struct RunOverrides {
  std::optional<BigInt> prism_generator;
  std::optional<PrfKey> prf_key;
  std::optional<ProtocolIv> protocol_iv;
  std::optional<uint64_t> rnd_seed;
};

// m0 uniform in [0, p), m1 = (m - m0) mod p.
absl::StatusOr<std::pair<BigInt, BigInt>> SplitClientCount(
    const BigInt& m, const GroupParams& params, RandomSource& random);

// Randomness is consumed in a fixed order: the m split first, then the
// scheme secret (Prism scan start, AES key, or RND seed) unless overridden.
// Rejects m >= p: positions held by exactly m - p owners would reach exponent
// zero as well and be reported as intersection members.
absl::StatusOr<RunConfig> MakeRunConfig(Scheme scheme, const GroupParams& params,
                                        int m, size_t n, RandomSource& random,
                                        const RunOverrides& overrides = {});

ServerConfig ServerProjection(const RunConfig& config, int server_index);
ClientConfig ClientProjection(const RunConfig& config, int client_id);

}  // namespace kaleido

#endif  // KALEIDO_ORACLE_H_
