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

#ifndef KALEIDO_ATTACK_H_
#define KALEIDO_ATTACK_H_

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "absl/status/statusor.h"
#include "kaleido/domain.h"
#include "kaleido/group.h"
#include "kaleido/oracle.h"
#include "kaleido/random.h"
#include "kaleido/server.h"

namespace kaleido {

// Non-intersection positions grouped by identical combined ciphertext. Groups
// are sorted; singletons and positions equal to 1 are left out.
using EqualityGroups = std::vector<std::vector<size_t>>;

EqualityGroups ClusterEqualCiphertexts(const EncodedVector& combined);

enum class InferenceCase {
  kEqual,       // V_k[i] == V_k[j]: the values are equally popular
  kPlusOne,     // V_k[i] < V_k[j]: one more other owner holds value i
  kMinusOne,    // V_k[i] > V_k[j]: one more other owner holds value j
};

std::string_view InferenceCaseName(InferenceCase c);

// What owner k concludes from U[i] == U[j] != 1 and its own bits. Holds iff
// the number of *other* owners holding i minus those holding j equals
// V_k[j] - V_k[i].
struct Inference {
  int client = 0;
  size_t i = 0;
  size_t j = 0;
  InferenceCase tag = InferenceCase::kEqual;
  std::string statement;
};

absl::StatusOr<std::vector<Inference>> InferBeyondPsi(
    int client, const BitVector& client_vector, const EncodedVector& combined,
    const DomainCatalog* catalog = nullptr);

// Checks an inference against the owners' actual relations.
absl::StatusOr<bool> InferenceHolds(const Inference& inference,
                                    std::span<const Relation> relations,
                                    const DomainCatalog& catalog);

struct LeakageReport {
  EqualityGroups equal_groups;
  std::vector<Inference> inferences;
  // Ground truth, harness only: every group sits inside one Card_k class.
  std::optional<bool> card_refined;
  size_t true_inferences = 0;
};

// True iff each equality group lies within a single Card_k class (k < m).
absl::StatusOr<bool> GroupsRefineCardClasses(const EqualityGroups& groups,
                                             std::span<const Relation> relations,
                                             const DomainCatalog& catalog);

// Runs the protocol on the given instance and reports what every owner can
// infer, with ground truth attached.
absl::StatusOr<LeakageReport> AnalyzeLeakage(const RunConfig& config,
                                             std::span<const Relation> relations,
                                             const DomainCatalog& catalog,
                                             RandomSource& random);

struct CpaGameConfig {
  Scheme scheme = Scheme::kPrism;
  GroupParams params;
  int m = 4;
  // Background values every owner holds at random besides the planted ones.
  size_t background_values = 8;
};

struct CpaGameOutcome {
  Scheme scheme = Scheme::kPrism;
  int trials = 0;
  int successes = 0;
  // Trials where the adversary found no matching reference and guessed.
  int coin_flips = 0;

  double success_rate() const {
    return trials == 0 ? 0.0 : static_cast<double>(successes) / trials;
  }
};

// Two-round distinguisher, once per trial with fresh scheme secrets:
//  round 1: the challenger plants value x_n with m-1 holders (b = 0) or m-2
//           holders (b = 1), all excluding owner 0; the adversary reads u_n.
//  round 2: x_{n+1} is planted with m-1 holders and x_{n+2} with m-2; the
//           adversary reads u_{n+1} and u_{n+2}.
// b' = 0 if u_n == u_{n+1}, 1 if u_n == u_{n+2}, otherwise a fair coin.
absl::StatusOr<CpaGameOutcome> RunCpaGame(const CpaGameConfig& config,
                                          int trials, RandomSource& random);

}  // namespace kaleido

#endif  // KALEIDO_ATTACK_H_
