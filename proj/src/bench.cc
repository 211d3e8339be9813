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

#include "kaleido/bench.h"

#include <algorithm>
#include <map>
#include <memory>

#include "absl/strings/str_cat.h"
#include "absl/strings/str_format.h"
#include "absl/strings/str_split.h"
#include "absl/strings/ascii.h"
#include "kaleido/config.h"
#include "kaleido/status.h"

namespace kaleido {
namespace {

std::chrono::nanoseconds Lookup(const std::vector<StageTiming>& timings,
                                std::string_view stage) {
  for (const StageTiming& t : timings) {
    if (t.stage == stage) return t.elapsed;
  }
  return std::chrono::nanoseconds(0);
}

double Seconds(std::chrono::nanoseconds d) {
  return std::chrono::duration<double>(d).count();
}

}  // namespace

BenchmarkRecord MakeBenchmarkRecord(Scheme scheme, const RunReport& report,
                                    const AuditLog& audit) {
  BenchmarkRecord record;
  record.scheme = scheme;
  record.m = static_cast<int>(report.clients.size());
  record.n = report.clients.empty() ? 0 : report.clients.front().local.size();
  for (const char* stage : kClientStages) {
    std::chrono::nanoseconds total{0};
    for (const ClientResult& c : report.clients) total += Lookup(c.timings, stage);
    record.client_stages.emplace_back(
        stage, report.clients.empty() ? total
                               : total / static_cast<int64_t>(report.clients.size()));
  }
  for (const char* stage : kServerStages) {
    std::chrono::nanoseconds total{0};
    for (const ServerResult& s : report.servers) total += Lookup(s.timings, stage);
    record.server_stages.emplace_back(stage, total / 2);
  }
  record.traffic = audit.Summarize();
  for (const AuditRecord& r : audit.Records()) {
    if (r.type == MessageType::kShareVector && record.client_vector_bytes == 0) {
      record.client_vector_bytes = r.bytes.size();
    }
    if (r.type == MessageType::kEncodedVector && record.server_vector_bytes == 0) {
      record.server_vector_bytes = r.bytes.size();
    }
  }
  return record;
}

absl::StatusOr<std::vector<Scheme>> ParseSchemeList(std::string_view csv) {
  std::vector<Scheme> out;
  for (absl::string_view part : absl::StrSplit(AsAbsl(csv), ',', absl::SkipEmpty())) {
    KALEIDO_ASSIGN_OR_RETURN(Scheme s,
                             ParseScheme(std::string(absl::StripAsciiWhitespace(part))));
    out.push_back(s);
  }
  if (out.empty()) return ParameterError("no schemes given");
  return out;
}

absl::StatusOr<std::vector<BenchmarkRow>> RunBenchmark(const BenchSpec& spec) {
  if (spec.repetitions < 1) return ParameterError("repetitions must be >= 1");
  if (spec.schemes.empty()) return ParameterError("no schemes given");
  KALEIDO_ASSIGN_OR_RETURN(Workload workload, GenerateWorkload(spec.workload));
  std::vector<ClientInput> inputs;
  for (const Relation& r : workload.relations) {
    inputs.push_back(ClientInput{.path = std::nullopt, .relation = r});
  }

  std::vector<BenchmarkRow> rows;
  for (Scheme scheme : spec.schemes) {
    BenchmarkRow row;
    row.scheme = scheme;
    row.m = spec.workload.m;
    row.n = spec.workload.n;
    row.repetitions = spec.repetitions;
    std::map<std::string, std::vector<double>> samples;
    std::vector<std::string> order;
    for (int rep = 0; rep < spec.repetitions; ++rep) {
      const uint64_t run_seed = DeriveSeed(
          spec.seed, absl::StrCat("bench/", AsAbsl(SchemeName(scheme))), rep);
      SeededRandom oracle_random(DeriveSeed(run_seed, "oracle"));
      KALEIDO_ASSIGN_OR_RETURN(
          RunConfig config,
          MakeRunConfig(scheme, spec.params, spec.workload.m,
                        workload.catalog.size(), oracle_random));
      auto audit = std::make_shared<AuditLog>();
      EndpointAddresses addresses;
      if (spec.backend == TransportBackend::kTcp) {
        KALEIDO_ASSIGN_OR_RETURN(addresses,
                                 TcpAddressesFor(FileConfig{}, spec.workload.m));
      }
      KALEIDO_ASSIGN_OR_RETURN(
          std::unique_ptr<Transport> transport,
          MakeAuditedTransport(spec.backend, audit, addresses));
      DistributedOptions options;
      options.timeout = spec.timeout;
      KALEIDO_ASSIGN_OR_RETURN(
          RunReport report,
          RunDistributed(
              config, inputs, workload.catalog, *transport,
              [run_seed](int c) {
                return std::make_unique<SeededRandom>(
                    DeriveSeed(run_seed, "client", c));
              },
              options));
      BenchmarkRecord record = MakeBenchmarkRecord(scheme, report, *audit);
      for (const auto& [stage, d] : record.client_stages) {
        std::string key = absl::StrCat("client.", stage);
        if (rep == 0) order.push_back(key);
        samples[key].push_back(Seconds(d));
      }
      for (const auto& [stage, d] : record.server_stages) {
        std::string key = absl::StrCat("server.", stage);
        if (rep == 0) order.push_back(key);
        samples[key].push_back(Seconds(d));
      }
      row.traffic = record.traffic;
      row.client_vector_bytes = record.client_vector_bytes;
      row.server_vector_bytes = record.server_vector_bytes;
    }
    for (const std::string& key : order) {
      const std::vector<double>& v = samples[key];
      StageStats stats;
      stats.min_s = *std::min_element(v.begin(), v.end());
      stats.max_s = *std::max_element(v.begin(), v.end());
      double sum = 0;
      for (double x : v) sum += x;
      stats.mean_s = std::clamp(sum / v.size(), stats.min_s, stats.max_s);
      row.stages.emplace_back(key, stats);
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string FormatBenchmarkRecord(const BenchmarkRecord& record) {
  std::string out = absl::StrFormat("timing scheme=%s m=%d n=%d\n",
                                    AsAbsl(SchemeName(record.scheme)), record.m,
                                    record.n);
  for (const auto& [stage, d] : record.client_stages) {
    absl::StrAppendFormat(&out, "timing client.%s %.6f s\n", stage, Seconds(d));
  }
  for (const auto& [stage, d] : record.server_stages) {
    absl::StrAppendFormat(&out, "timing server.%s %.6f s\n", stage, Seconds(d));
  }
  const TrafficSummary& t = record.traffic;
  absl::StrAppendFormat(&out,
                        "traffic upstream_frames=%d upstream_bytes=%d "
                        "downstream_frames=%d downstream_bytes=%d "
                        "server_to_server_frames=%d rounds=%d\n",
                        t.upstream_frames, t.upstream_bytes,
                        t.downstream_frames, t.downstream_bytes,
                        t.server_to_server_frames, t.rounds);
  absl::StrAppendFormat(&out, "vector_bytes client=%d server=%d\n",
                        record.client_vector_bytes, record.server_vector_bytes);
  return out;
}

std::string FormatBenchmarkTable(const std::vector<BenchmarkRow>& rows) {
  std::string out = absl::StrFormat("%-12s %-20s %12s %12s %12s\n", "scheme",
                                    "stage", "mean_s", "min_s", "max_s");
  for (const BenchmarkRow& row : rows) {
    for (const auto& [stage, s] : row.stages) {
      absl::StrAppendFormat(&out, "%-12s %-20s %12.6f %12.6f %12.6f\n",
                            AsAbsl(SchemeName(row.scheme)), stage, s.mean_s, s.min_s,
                            s.max_s);
    }
    absl::StrAppendFormat(
        &out,
        "%-12s traffic up=%d frames/%d B down=%d frames/%d B s2s=%d rounds=%d "
        "client_vector=%d B server_vector=%d B\n",
        AsAbsl(SchemeName(row.scheme)), row.traffic.upstream_frames,
        row.traffic.upstream_bytes, row.traffic.downstream_frames,
        row.traffic.downstream_bytes, row.traffic.server_to_server_frames,
        row.traffic.rounds, row.client_vector_bytes, row.server_vector_bytes);
  }
  return out;
}

std::string FormatBenchmarkCsv(const std::vector<BenchmarkRow>& rows) {
  std::string out =
      "scheme,m,n,repetitions,stage,mean_s,min_s,max_s,upstream_frames,"
      "upstream_bytes,downstream_frames,downstream_bytes,"
      "server_to_server_frames\n";
  for (const BenchmarkRow& row : rows) {
    for (const auto& [stage, s] : row.stages) {
      absl::StrAppendFormat(&out, "%s,%d,%d,%d,%s,%.9f,%.9f,%.9f,%d,%d,%d,%d,%d\n",
                            AsAbsl(SchemeName(row.scheme)), row.m, row.n,
                            row.repetitions, stage, s.mean_s, s.min_s, s.max_s,
                            row.traffic.upstream_frames,
                            row.traffic.upstream_bytes,
                            row.traffic.downstream_frames,
                            row.traffic.downstream_bytes,
                            row.traffic.server_to_server_frames);
    }
  }
  return out;
}

}  // namespace kaleido
