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

#ifndef KALEIDO_BENCH_H_
#define KALEIDO_BENCH_H_

#include <chrono>
#include <string>
#include <utility>
#include <vector>

#include "absl/status/statusor.h"
#include "kaleido/audit.h"
#include "kaleido/group.h"
#include "kaleido/oracle.h"
#include "kaleido/protocol.h"
#include "kaleido/transport.h"
#include "kaleido/workload.h"

namespace kaleido {

// Stage names reported for clients and servers, in display order.
inline constexpr const char* kClientStages[] = {"Load", "Hash", "Split",
                                                "Recover"};
inline constexpr const char* kServerStages[] = {"Aggregate", "Encode",
                                                "Broadcast"};

// One protocol execution. Client stages are averaged over clients, server
// stages over the two servers.
struct BenchmarkRecord {
  Scheme scheme = Scheme::kPrism;
  int m = 0;
  size_t n = 0;
  std::vector<std::pair<std::string, std::chrono::nanoseconds>> client_stages;
  std::vector<std::pair<std::string, std::chrono::nanoseconds>> server_stages;
  TrafficSummary traffic;
  size_t client_vector_bytes = 0;  // one upstream share frame
  size_t server_vector_bytes = 0;  // one downstream encoded frame
};

BenchmarkRecord MakeBenchmarkRecord(Scheme scheme, const RunReport& report,
                                    const AuditLog& audit);

struct StageStats {
  double mean_s = 0;
  double min_s = 0;
  double max_s = 0;
};

struct BenchmarkRow {
  Scheme scheme = Scheme::kPrism;
  int m = 0;
  size_t n = 0;
  int repetitions = 0;
  // Client stages then server stages, each key prefixed "client." / "server.".
  std::vector<std::pair<std::string, StageStats>> stages;
  TrafficSummary traffic;  // from the last repetition; identical across reps
  size_t client_vector_bytes = 0;
  size_t server_vector_bytes = 0;
};

struct BenchSpec {
  WorkloadSpec workload;
  GroupParams params{BigInt(113), BigInt(227)};
  std::vector<Scheme> schemes{Scheme::kPrism, Scheme::kKaleidoRnd,
                              Scheme::kKaleidoAes};
  int repetitions = 1;
  uint64_t seed = 0;
  TransportBackend backend = TransportBackend::kInProc;
  std::chrono::milliseconds timeout{120000};
};

// Generates the workload once and runs every scheme on it.
absl::StatusOr<std::vector<BenchmarkRow>> RunBenchmark(const BenchSpec& spec);

absl::StatusOr<std::vector<Scheme>> ParseSchemeList(std::string_view csv);

std::string FormatBenchmarkRecord(const BenchmarkRecord& record);
std::string FormatBenchmarkTable(const std::vector<BenchmarkRow>& rows);
std::string FormatBenchmarkCsv(const std::vector<BenchmarkRow>& rows);

}  // namespace kaleido

#endif  // KALEIDO_BENCH_H_
