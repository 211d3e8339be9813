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

#include "kaleido/workload.h"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <numeric>
#include <random>

#include "absl/strings/str_cat.h"
#include "kaleido/random.h"
#include "kaleido/status.h"

namespace kaleido {
namespace {

// Portable bounded draw; std::uniform_int_distribution differs across
// standard libraries, which would break byte-identical output.
uint64_t Below(std::mt19937_64& engine, uint64_t bound) {
  const uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  while (true) {
    uint64_t x = engine();
    if (x < limit) return x % bound;
  }
}

double Unit(std::mt19937_64& engine) {
  // (0, 1]
  return (static_cast<double>(engine() >> 11) + 1.0) * 0x1.0p-53;
}

std::vector<size_t> SampleUniform(std::mt19937_64& engine, size_t n,
                                  size_t count) {
  std::vector<size_t> pool(n);
  std::iota(pool.begin(), pool.end(), 0);
  for (size_t i = 0; i < count; ++i) {
    size_t j = i + Below(engine, n - i);
    std::swap(pool[i], pool[j]);
  }
  pool.resize(count);
  return pool;
}

// Efraimidis-Spirakis: keep the `count` largest log(u) / w.
std::vector<size_t> SampleSkewed(std::mt19937_64& engine, size_t n,
                                 size_t count) {
  std::vector<std::pair<double, size_t>> keyed(n);
  for (size_t v = 0; v < n; ++v) {
    const double weight = 1.0 / static_cast<double>(v + 1);
    keyed[v] = {std::log(Unit(engine)) / weight, v};
  }
  std::partial_sort(keyed.begin(), keyed.begin() + count, keyed.end(),
                    [](const auto& a, const auto& b) {
                      return a.first > b.first ||
                             (a.first == b.first && a.second < b.second);
                    });
  std::vector<size_t> out;
  out.reserve(count);
  for (size_t i = 0; i < count; ++i) out.push_back(keyed[i].second);
  return out;
}

}  // namespace

absl::StatusOr<WorkloadKind> ParseWorkloadKind(std::string_view name) {
  if (name == "uniform") return WorkloadKind::kUniform;
  if (name == "skewed") return WorkloadKind::kSkewed;
  return ParameterError(absl::StrCat("unknown workload '", AsAbsl(name),
                                     "' (expected uniform, skewed)"));
}

absl::StatusOr<Workload> GenerateWorkload(const WorkloadSpec& spec) {
  if (spec.m < 1) return ParameterError("workload needs m >= 1");
  if (spec.per_client > spec.n) {
    return ParameterError(absl::StrCat("per-client count ", spec.per_client,
                                       " exceeds domain size ", spec.n));
  }
  Workload workload;
  workload.catalog = DomainCatalog::Range(spec.n);
  for (int c = 0; c < spec.m; ++c) {
    std::mt19937_64 engine(DeriveSeed(spec.seed, "workload", c));
    std::vector<size_t> picked =
        spec.kind == WorkloadKind::kUniform
            ? SampleUniform(engine, spec.n, spec.per_client)
            : SampleSkewed(engine, spec.n, spec.per_client);
    std::vector<std::string> items;
    items.reserve(picked.size());
    for (size_t v : picked) items.push_back(std::to_string(v));
    std::sort(items.begin(), items.end());
    workload.relations.push_back(Relation{.owner_id = c, .items = std::move(items)});
  }
  return workload;
}

absl::StatusOr<WorkloadFiles> WriteWorkload(const Workload& workload,
                                            const std::string& directory) {
  std::error_code ec;
  std::filesystem::create_directories(directory, ec);
  if (ec) {
    return IoError(absl::StrCat("cannot create ", directory, ": ", ec.message()));
  }
  WorkloadFiles files;
  files.domain_path = (std::filesystem::path(directory) / "domain.txt").string();
  KALEIDO_RETURN_IF_ERROR(WriteDomainFile(files.domain_path, workload.catalog));
  for (const Relation& relation : workload.relations) {
    std::string path = (std::filesystem::path(directory) /
                        absl::StrCat("client_", relation.owner_id, ".csv"))
                           .string();
    KALEIDO_RETURN_IF_ERROR(WriteRelationCsv(path, relation));
    files.relation_paths.push_back(std::move(path));
  }
  return files;
}

}  // namespace kaleido
