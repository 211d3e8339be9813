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

#include "kaleido/attack.h"

#include <algorithm>
#include <map>

#include "absl/strings/str_cat.h"
#include "kaleido/protocol.h"
#include "kaleido/status.h"

namespace kaleido {
namespace {

std::string ValueName(size_t pos, const DomainCatalog* catalog) {
  if (catalog != nullptr && pos < catalog->size()) return catalog->value(pos);
  return absl::StrCat("#", pos);
}

Relation WithPlanted(const Relation& base, int owner,
                     std::initializer_list<std::pair<const char*, int>> planted) {
  // `planted` pairs a value with the first owner index that holds it; owners
  // below that index do not.
  Relation out = base;
  for (const auto& [value, first_holder] : planted) {
    if (owner >= first_holder) out.items.emplace_back(value);
  }
  return out;
}

}  // namespace

std::string_view InferenceCaseName(InferenceCase c) {
  switch (c) {
    case InferenceCase::kEqual:
      return "EQUAL";
    case InferenceCase::kPlusOne:
      return "PLUS_ONE";
    case InferenceCase::kMinusOne:
      return "MINUS_ONE";
  }
  return "UNKNOWN";
}

EqualityGroups ClusterEqualCiphertexts(const EncodedVector& combined) {
  std::map<BigInt, std::vector<size_t>> by_value;
  for (size_t i = 0; i < combined.size(); ++i) {
    if (combined.elements[i] == 1) continue;
    by_value[combined.elements[i]].push_back(i);
  }
  EqualityGroups groups;
  for (auto& [value, positions] : by_value) {
    if (positions.size() > 1) groups.push_back(std::move(positions));
  }
  std::sort(groups.begin(), groups.end());
  return groups;
}

absl::StatusOr<std::vector<Inference>> InferBeyondPsi(
    int client, const BitVector& client_vector, const EncodedVector& combined,
    const DomainCatalog* catalog) {
  if (client_vector.size() != combined.size()) {
    return ParameterError(absl::StrCat("client vector has length ",
                                       client_vector.size(),
                                       ", combined vector ", combined.size()));
  }
  std::vector<Inference> out;
  for (const std::vector<size_t>& group : ClusterEqualCiphertexts(combined)) {
    for (size_t a = 0; a < group.size(); ++a) {
      for (size_t c = a + 1; c < group.size(); ++c) {
        const size_t i = group[a];
        const size_t j = group[c];
        Inference inf{.client = client, .i = i, .j = j};
        if (client_vector[i] == client_vector[j]) {
          inf.tag = InferenceCase::kEqual;
          inf.statement = absl::StrCat("values ", ValueName(i, catalog),
                                       " and ", ValueName(j, catalog),
                                       " are held by equally many owners");
        } else if (client_vector[i] < client_vector[j]) {
          inf.tag = InferenceCase::kPlusOne;
          inf.statement = absl::StrCat(
              "exactly one more other owner holds value ",
              ValueName(i, catalog), " than value ", ValueName(j, catalog));
        } else {
          inf.tag = InferenceCase::kMinusOne;
          inf.statement = absl::StrCat(
              "exactly one more other owner holds value ",
              ValueName(j, catalog), " than value ", ValueName(i, catalog));
        }
        out.push_back(std::move(inf));
      }
    }
  }
  return out;
}

absl::StatusOr<bool> InferenceHolds(const Inference& inference,
                                    std::span<const Relation> relations,
                                    const DomainCatalog& catalog) {
  if (inference.client < 0 ||
      inference.client >= static_cast<int>(relations.size())) {
    return ParameterError("inference names an unknown owner");
  }
  if (inference.i >= catalog.size() || inference.j >= catalog.size()) {
    return ParameterError("inference position outside the domain");
  }
  int others_i = 0;
  int others_j = 0;
  int own_i = 0;
  int own_j = 0;
  for (size_t k = 0; k < relations.size(); ++k) {
    KALEIDO_ASSIGN_OR_RETURN(BitVector bits, Vectorize(relations[k], catalog));
    if (static_cast<int>(k) == inference.client) {
      own_i = bits[inference.i];
      own_j = bits[inference.j];
    } else {
      others_i += bits[inference.i];
      others_j += bits[inference.j];
    }
  }
  switch (inference.tag) {
    case InferenceCase::kEqual:
      return own_i == own_j && others_i == others_j;
    case InferenceCase::kPlusOne:
      return own_i < own_j && others_i == others_j + 1;
    case InferenceCase::kMinusOne:
      return own_i > own_j && others_j == others_i + 1;
  }
  return false;
}

absl::StatusOr<bool> GroupsRefineCardClasses(
    const EqualityGroups& groups, std::span<const Relation> relations,
    const DomainCatalog& catalog) {
  KALEIDO_ASSIGN_OR_RETURN(std::vector<int> counts,
                           HolderCounts(relations, catalog));
  const int m = static_cast<int>(relations.size());
  for (const std::vector<size_t>& group : groups) {
    for (size_t pos : group) {
      if (pos >= counts.size()) return ParameterError("group position out of range");
      if (counts[pos] != counts[group.front()] || counts[pos] >= m) {
        return false;
      }
    }
  }
  return true;
}

absl::StatusOr<LeakageReport> AnalyzeLeakage(const RunConfig& config,
                                             std::span<const Relation> relations,
                                             const DomainCatalog& catalog,
                                             RandomSource& random) {
  KALEIDO_ASSIGN_OR_RETURN(SimulationResult run,
                           Simulate(config, relations, catalog, random));
  LeakageReport report;
  report.equal_groups = ClusterEqualCiphertexts(run.combined);
  for (int k = 0; k < config.m; ++k) {
    KALEIDO_ASSIGN_OR_RETURN(
        std::vector<Inference> inferences,
        InferBeyondPsi(k, run.locals[k], run.combined, &catalog));
    for (Inference& inf : inferences) {
      KALEIDO_ASSIGN_OR_RETURN(bool holds,
                               InferenceHolds(inf, relations, catalog));
      if (holds) ++report.true_inferences;
      report.inferences.push_back(std::move(inf));
    }
  }
  KALEIDO_ASSIGN_OR_RETURN(
      report.card_refined,
      GroupsRefineCardClasses(report.equal_groups, relations, catalog));
  return report;
}

absl::StatusOr<CpaGameOutcome> RunCpaGame(const CpaGameConfig& config,
                                          int trials, RandomSource& random) {
  if (trials < 1) return ParameterError("trials must be >= 1");
  if (config.m < 3) {
    return ParameterError("the two-round distinguisher needs m >= 3");
  }
  static constexpr const char* kChallenge = "x_n";
  static constexpr const char* kReferenceFull = "x_n+1";
  static constexpr const char* kReferencePartial = "x_n+2";

  std::vector<std::string> values;
  for (size_t v = 0; v < config.background_values; ++v) {
    values.push_back(std::to_string(v));
  }
  values.insert(values.end(), {kChallenge, kReferenceFull, kReferencePartial});
  const DomainCatalog catalog = DomainCatalog::FromUnsorted(values);
  const size_t challenge_pos = *catalog.Find(kChallenge);
  const size_t full_pos = *catalog.Find(kReferenceFull);
  const size_t partial_pos = *catalog.Find(kReferencePartial);

  CpaGameOutcome outcome;
  outcome.scheme = config.scheme;
  for (int t = 0; t < trials; ++t) {
    const int b = random.NextBit() ? 1 : 0;
    KALEIDO_ASSIGN_OR_RETURN(
        RunConfig run_config,
        MakeRunConfig(config.scheme, config.params, config.m, catalog.size(),
                      random));

    std::vector<Relation> background(config.m);
    for (int k = 0; k < config.m; ++k) {
      background[k].owner_id = k;
      for (size_t v = 0; v < config.background_values; ++v) {
        if (random.NextBit()) background[k].items.push_back(std::to_string(v));
      }
    }

    std::vector<Relation> round1;
    std::vector<Relation> round2;
    for (int k = 0; k < config.m; ++k) {
      round1.push_back(WithPlanted(background[k], k, {{kChallenge, 1 + b}}));
      round2.push_back(WithPlanted(background[k], k,
                                   {{kReferenceFull, 1}, {kReferencePartial, 2}}));
    }
    KALEIDO_ASSIGN_OR_RETURN(SimulationResult first,
                             Simulate(run_config, round1, catalog, random));
    KALEIDO_ASSIGN_OR_RETURN(SimulationResult second,
                             Simulate(run_config, round2, catalog, random));
    const BigInt& u_n = first.combined.elements[challenge_pos];
    const bool match_full = u_n == second.combined.elements[full_pos];
    const bool match_partial = u_n == second.combined.elements[partial_pos];

    int guess;
    if (match_full && !match_partial) {
      guess = 0;
    } else if (match_partial && !match_full) {
      guess = 1;
    } else {
      guess = random.NextBit() ? 1 : 0;
      ++outcome.coin_flips;
    }
    ++outcome.trials;
    if (guess == b) ++outcome.successes;
  }
  return outcome;
}

}  // namespace kaleido
