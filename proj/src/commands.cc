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

#include "kaleido/commands.h"

#include <algorithm>
#include <fstream>
#include <memory>

#include <openssl/evp.h>

#include "absl/status/statusor.h"
#include "absl/strings/escaping.h"
#include "absl/strings/str_cat.h"
#include "absl/strings/str_format.h"
#include "absl/strings/str_join.h"
#include "kaleido/attack.h"
#include "kaleido/audit.h"
#include "kaleido/bench.h"
#include "kaleido/config.h"
#include "kaleido/domain.h"
#include "kaleido/protocol.h"
#include "kaleido/status.h"
#include "kaleido/workload.h"

namespace kaleido {
namespace {

int Fail(const absl::Status& status, std::ostream& err) {
  err << "error: " << status.message() << "\n";
  return ExitCodeFor(status);
}

// SHA-256 over every audited frame, ordered by edge and type so that thread
// interleaving does not change it.
std::string WireDigest(const AuditLog& audit) {
  std::vector<AuditRecord> records = audit.Records();
  std::stable_sort(records.begin(), records.end(),
                   [](const AuditRecord& a, const AuditRecord& b) {
                     return std::tie(a.sender, a.receiver, a.type) <
                            std::tie(b.sender, b.receiver, b.type);
                   });
  EVP_MD_CTX* ctx = EVP_MD_CTX_new();
  EVP_DigestInit_ex(ctx, EVP_sha256(), nullptr);
  for (const AuditRecord& r : records) {
    EVP_DigestUpdate(ctx, r.bytes.data(), r.bytes.size());
  }
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  EVP_DigestFinal_ex(ctx, digest, &len);
  EVP_MD_CTX_free(ctx);
  return absl::BytesToHexString(
      absl::string_view(reinterpret_cast<const char*>(digest), len));
}

std::unique_ptr<RandomSource> MakeRandom(const std::optional<uint64_t>& seed,
                                         std::string_view label,
                                         uint64_t index = 0) {
  if (seed.has_value()) {
    return std::make_unique<SeededRandom>(DeriveSeed(*seed, label, index));
  }
  return std::make_unique<SecureRandom>();
}

absl::Status WriteText(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) return IoError(absl::StrCat("cannot write ", path));
  f << text;
  if (!f) return IoError(absl::StrCat("write failed: ", path));
  return absl::OkStatus();
}

absl::Status RunImpl(const RunCommand& cmd, std::ostream& out) {
  KALEIDO_ASSIGN_OR_RETURN(FileConfig config, LoadConfigFile(cmd.config_path));
  if (cmd.scheme.has_value()) {
    KALEIDO_ASSIGN_OR_RETURN(config.scheme, ParseScheme(*cmd.scheme));
  }
  KALEIDO_ASSIGN_OR_RETURN(TransportBackend backend,
                           ParseTransportBackend(cmd.transport));
  if (cmd.relation_paths.empty()) {
    return ParameterError("at least one relation file is required");
  }
  const int m = static_cast<int>(cmd.relation_paths.size());
  if (config.m.has_value() && *config.m != m) {
    return ParameterError(absl::StrCat("config says m=", *config.m, " but ", m,
                                       " relation files were given"));
  }
  for (const std::string& path : cmd.relation_paths) {
    std::ifstream probe(path);
    if (!probe) return IoError(absl::StrCat("cannot open relation file ", path));
  }
  KALEIDO_ASSIGN_OR_RETURN(DomainCatalog catalog,
                           LoadDomainFile(cmd.domain_path));

  std::unique_ptr<RandomSource> oracle_random = MakeRandom(cmd.seed, "oracle");
  KALEIDO_ASSIGN_OR_RETURN(
      RunConfig run_config,
      MakeRunConfig(config.scheme, config.params, m, catalog.size(),
                    *oracle_random, config.overrides));

  auto audit = std::make_shared<AuditLog>();
  EndpointAddresses addresses;
  if (backend == TransportBackend::kTcp) {
    KALEIDO_ASSIGN_OR_RETURN(addresses, TcpAddressesFor(config, m));
  }
  KALEIDO_ASSIGN_OR_RETURN(std::unique_ptr<Transport> transport,
                           MakeAuditedTransport(backend, audit, addresses));

  std::vector<ClientInput> inputs;
  for (const std::string& path : cmd.relation_paths) {
    inputs.push_back(ClientInput{.path = path, .relation = {}});
  }
  DistributedOptions options;
  options.timeout = config.timeout;
  const std::optional<uint64_t> seed = cmd.seed;
  KALEIDO_ASSIGN_OR_RETURN(
      RunReport report,
      RunDistributed(run_config, inputs, catalog, *transport,
                     [seed](int c) { return MakeRandom(seed, "client", c); },
                     options));
  KALEIDO_RETURN_IF_ERROR(audit->CheckNonCollusion(run_config.scheme));

  for (const ClientResult& client : report.clients) {
    out << "client " << client.client_id << "\n";
    for (const std::string& v : client.psi.values) out << "PSI: " << v << "\n";
  }
  BenchmarkRecord record = MakeBenchmarkRecord(run_config.scheme, report, *audit);
  out << FormatBenchmarkRecord(record);
  out << "wire_digest " << WireDigest(*audit) << "\n";
  if (cmd.out.has_value()) {
    std::string csv = "section,stage,seconds\n";
    for (const auto& [stage, d] : record.client_stages) {
      absl::StrAppendFormat(&csv, "client,%s,%.9f\n", stage,
                            std::chrono::duration<double>(d).count());
    }
    for (const auto& [stage, d] : record.server_stages) {
      absl::StrAppendFormat(&csv, "server,%s,%.9f\n", stage,
                            std::chrono::duration<double>(d).count());
    }
    KALEIDO_RETURN_IF_ERROR(WriteText(*cmd.out, csv));
  }
  return absl::OkStatus();
}

absl::Status GenImpl(const GenCommand& cmd, std::ostream& out) {
  KALEIDO_ASSIGN_OR_RETURN(WorkloadKind kind, ParseWorkloadKind(cmd.workload));
  WorkloadSpec spec{.kind = kind,
                    .n = cmd.n,
                    .m = cmd.m,
                    .per_client = cmd.count.value_or(cmd.n * 4 / 5),
                    .seed = cmd.seed};
  KALEIDO_ASSIGN_OR_RETURN(Workload workload, GenerateWorkload(spec));
  KALEIDO_ASSIGN_OR_RETURN(WorkloadFiles files,
                           WriteWorkload(workload, cmd.out_dir));
  out << "domain " << files.domain_path << "\n";
  for (const std::string& path : files.relation_paths) {
    out << "relation " << path << "\n";
  }
  return absl::OkStatus();
}

absl::Status BenchImpl(const BenchCommand& cmd, std::ostream& out) {
  BenchSpec spec;
  if (cmd.config_path.has_value()) {
    KALEIDO_ASSIGN_OR_RETURN(FileConfig config, LoadConfigFile(*cmd.config_path));
    spec.params = config.params;
  }
  KALEIDO_ASSIGN_OR_RETURN(WorkloadKind kind, ParseWorkloadKind(cmd.workload));
  spec.workload = WorkloadSpec{.kind = kind,
                               .n = cmd.n,
                               .m = cmd.m,
                               .per_client = cmd.count.value_or(cmd.n * 4 / 5),
                               .seed = cmd.seed};
  KALEIDO_ASSIGN_OR_RETURN(spec.schemes, ParseSchemeList(cmd.schemes));
  KALEIDO_ASSIGN_OR_RETURN(spec.backend, ParseTransportBackend(cmd.transport));
  spec.repetitions = cmd.repetitions;
  spec.seed = cmd.seed;
  KALEIDO_ASSIGN_OR_RETURN(std::vector<BenchmarkRow> rows, RunBenchmark(spec));
  out << FormatBenchmarkTable(rows);
  if (cmd.out.has_value()) {
    KALEIDO_RETURN_IF_ERROR(WriteText(*cmd.out, FormatBenchmarkCsv(rows)));
  }
  return absl::OkStatus();
}

absl::Status AttackImpl(const AttackCommand& cmd, std::ostream& out) {
  FileConfig config;
  if (cmd.config_path.has_value()) {
    KALEIDO_ASSIGN_OR_RETURN(config, LoadConfigFile(*cmd.config_path));
  }
  if (cmd.scheme.has_value()) {
    KALEIDO_ASSIGN_OR_RETURN(config.scheme, ParseScheme(*cmd.scheme));
  }
  std::unique_ptr<RandomSource> random = MakeRandom(cmd.seed, "attack");

  if (cmd.mode == "cpa") {
    CpaGameConfig game{.scheme = config.scheme,
                       .params = config.params,
                       .m = config.m.value_or(cmd.m)};
    KALEIDO_ASSIGN_OR_RETURN(CpaGameOutcome outcome,
                             RunCpaGame(game, cmd.trials, *random));
    out << absl::StrFormat(
        "cpa scheme=%s m=%d trials=%d successes=%d success_rate=%.6f "
        "coin_flips=%d\n",
        AsAbsl(SchemeName(outcome.scheme)), game.m, outcome.trials, outcome.successes,
        outcome.success_rate(), outcome.coin_flips);
    if (outcome.scheme == Scheme::kKaleidoRnd) {
      out << "note: kaleido-rnd has no IND-CPA proof; this rate is empirical\n";
    }
    return absl::OkStatus();
  }
  if (cmd.mode != "leakage") {
    return ParameterError(absl::StrCat("unknown attack mode '", cmd.mode,
                                       "' (expected leakage, cpa)"));
  }

  DomainCatalog catalog;
  std::vector<Relation> relations;
  if (!cmd.relation_paths.empty()) {
    if (!cmd.domain_path.has_value()) {
      return ParameterError("--relations needs --domain");
    }
    KALEIDO_ASSIGN_OR_RETURN(catalog, LoadDomainFile(*cmd.domain_path));
    for (size_t i = 0; i < cmd.relation_paths.size(); ++i) {
      KALEIDO_ASSIGN_OR_RETURN(
          Relation r, LoadRelationCsv(cmd.relation_paths[i], static_cast<int>(i)));
      relations.push_back(std::move(r));
    }
  } else {
    KALEIDO_ASSIGN_OR_RETURN(
        Workload workload,
        GenerateWorkload(WorkloadSpec{.kind = WorkloadKind::kUniform,
                                      .n = cmd.n,
                                      .m = cmd.m,
                                      .per_client = cmd.n / 2,
                                      .seed = cmd.seed.value_or(0)}));
    catalog = std::move(workload.catalog);
    relations = std::move(workload.relations);
  }
  const int m = static_cast<int>(relations.size());
  KALEIDO_ASSIGN_OR_RETURN(
      RunConfig run_config,
      MakeRunConfig(config.scheme, config.params, m, catalog.size(), *random,
                    config.overrides));
  KALEIDO_ASSIGN_OR_RETURN(
      LeakageReport report,
      AnalyzeLeakage(run_config, relations, catalog, *random));

  out << "leakage scheme=" << SchemeName(run_config.scheme) << " m=" << m
      << " n=" << catalog.size() << "\n";
  for (const std::vector<size_t>& group : report.equal_groups) {
    std::vector<std::string> values;
    for (size_t pos : group) values.push_back(catalog.value(pos));
    out << "group positions=" << absl::StrJoin(group, ",")
        << " values=" << absl::StrJoin(values, ",") << "\n";
  }
  for (const Inference& inf : report.inferences) {
    KALEIDO_ASSIGN_OR_RETURN(bool holds, InferenceHolds(inf, relations, catalog));
    out << absl::StrFormat("inference client=%d pair=%d,%d case=%s holds=%s | %s\n",
                           inf.client, inf.i, inf.j,
                           AsAbsl(InferenceCaseName(inf.tag)), holds ? "true" : "false",
                           inf.statement);
  }
  out << absl::StrFormat(
      "summary groups=%d inferences=%d true_inferences=%d card_refined=%s\n",
      report.equal_groups.size(), report.inferences.size(),
      report.true_inferences,
      report.card_refined.value_or(false) ? "true" : "false");
  return absl::OkStatus();
}

}  // namespace

int CmdRun(const RunCommand& cmd, std::ostream& out, std::ostream& err) {
  absl::Status st = RunImpl(cmd, out);
  return st.ok() ? 0 : Fail(st, err);
}

int CmdGen(const GenCommand& cmd, std::ostream& out, std::ostream& err) {
  absl::Status st = GenImpl(cmd, out);
  return st.ok() ? 0 : Fail(st, err);
}

int CmdBench(const BenchCommand& cmd, std::ostream& out, std::ostream& err) {
  absl::Status st = BenchImpl(cmd, out);
  return st.ok() ? 0 : Fail(st, err);
}

int CmdAttack(const AttackCommand& cmd, std::ostream& out, std::ostream& err) {
  absl::Status st = AttackImpl(cmd, out);
  return st.ok() ? 0 : Fail(st, err);
}

}  // namespace kaleido
