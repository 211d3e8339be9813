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

#ifndef KALEIDO_COMMANDS_H_
#define KALEIDO_COMMANDS_H_

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace kaleido {

// Subcommand bodies behind the `kaleido` binary. Each returns the process
// exit code: 0 success, 2 parameter error, 3 protocol error, 4 I/O error.

struct RunCommand {
  std::string config_path;
  std::string domain_path;
  std::vector<std::string> relation_paths;
  std::optional<std::string> scheme;
  std::string transport = "inproc";
  std::optional<uint64_t> seed;
  std::optional<std::string> out;  // CSV copy of the benchmark record
};

struct GenCommand {
  std::string workload = "uniform";
  size_t n = 10000;
  int m = 4;
  std::optional<size_t> count;  // default: 80% of n
  uint64_t seed = 0;
  std::string out_dir = ".";
};

struct BenchCommand {
  std::optional<std::string> config_path;
  std::string workload = "uniform";
  size_t n = 10000;
  int m = 4;
  std::optional<size_t> count;
  std::string schemes = "prism,kaleido-rnd,kaleido-aes";
  int repetitions = 1;
  uint64_t seed = 0;
  std::string transport = "inproc";
  std::optional<std::string> out;
};

struct AttackCommand {
  std::optional<std::string> config_path;
  std::string mode = "leakage";
  int trials = 100;
  std::optional<std::string> scheme;
  std::optional<std::string> domain_path;
  std::vector<std::string> relation_paths;
  // Generated instance when no relations are supplied.
  size_t n = 16;
  int m = 4;
  std::optional<uint64_t> seed;
};

int CmdRun(const RunCommand& cmd, std::ostream& out, std::ostream& err);
int CmdGen(const GenCommand& cmd, std::ostream& out, std::ostream& err);
int CmdBench(const BenchCommand& cmd, std::ostream& out, std::ostream& err);
int CmdAttack(const AttackCommand& cmd, std::ostream& out, std::ostream& err);

}  // namespace kaleido

#endif  // KALEIDO_COMMANDS_H_
