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

#ifndef KALEIDO_CLIENT_H_
#define KALEIDO_CLIENT_H_

#include <chrono>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "absl/status/statusor.h"
#include "kaleido/domain.h"
#include "kaleido/oracle.h"
#include "kaleido/random.h"
#include "kaleido/server.h"
#include "kaleido/transport.h"

namespace kaleido {

// U = U^0 (.) U^1, element-wise mod q.
absl::StatusOr<EncodedVector> Combine(const EncodedVector& u0,
                                      const EncodedVector& u1,
                                      const GroupParams& params);

struct PsiResult {
  std::set<size_t> positions;
  std::vector<std::string> values;  // catalog order
};

// Positions whose combined encoding is 1.
absl::StatusOr<PsiResult> ExtractPsi(const EncodedVector& combined,
                                     const DomainCatalog& catalog);

// Where a client gets its relation: a CSV file read during the Load stage, or
// an in-memory relation.
struct ClientInput {
  std::optional<std::string> path;
  Relation relation;
};

struct ClientResult {
  int client_id = 0;
  BitVector local;
  EncodedVector combined;
  PsiResult psi;
  std::vector<StageTiming> timings;  // Load, Hash, Split, Recover
};

// Load -> Hash (vectorize) -> Split -> send V_i^0 to S0 and V_i^1 to S1 ->
// wait for both broadcasts (either order) -> Recover.
absl::StatusOr<ClientResult> ClientRun(
    const ClientInput& input, const DomainCatalog& catalog,
    const ClientConfig& config, Transport& transport, RandomSource& random,
    std::chrono::milliseconds timeout = std::chrono::milliseconds(30000));

}  // namespace kaleido

#endif  // KALEIDO_CLIENT_H_
