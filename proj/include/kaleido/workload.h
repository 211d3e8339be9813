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

#ifndef KALEIDO_WORKLOAD_H_
#define KALEIDO_WORKLOAD_H_

#include <cstdint>
#include <string>
#include <vector>

#include "absl/status/statusor.h"
#include "kaleido/domain.h"

namespace kaleido {

enum class WorkloadKind {
  kUniform,  // each owner samples values uniformly without replacement
  kSkewed,   // Zipf(1) weights over the numeric value, without replacement
};

absl::StatusOr<WorkloadKind> ParseWorkloadKind(std::string_view name);

struct WorkloadSpec {
  WorkloadKind kind = WorkloadKind::kUniform;
  size_t n = 10000;
  int m = 4;
  size_t per_client = 8000;
  uint64_t seed = 0;
};

// Domain is the integers [0, n); relations are deterministic in the seed.
struct Workload {
  DomainCatalog catalog;
  std::vector<Relation> relations;
};

absl::StatusOr<Workload> GenerateWorkload(const WorkloadSpec& spec);

struct WorkloadFiles {
  std::string domain_path;
  std::vector<std::string> relation_paths;
};

// Writes `domain.txt` and `client_<i>.csv` under `directory` (created if
// missing).
absl::StatusOr<WorkloadFiles> WriteWorkload(const Workload& workload,
                                            const std::string& directory);

}  // namespace kaleido

#endif  // KALEIDO_WORKLOAD_H_
