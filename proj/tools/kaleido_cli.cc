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

// Command-line entry point: `kaleido run|gen|bench|attack`.

#include <iostream>

#include "CLI11.hpp"
#include "kaleido/commands.h"

int main(int argc, char** argv) {
  CLI::App app{"Multi-party private set intersection (Prism / Kaleido)"};
  app.require_subcommand(1);

  kaleido::RunCommand run;
  CLI::App* run_cmd = app.add_subcommand("run", "Run one PSI execution");
  run_cmd->add_option("--config", run.config_path, "Run configuration file")
      ->required();
  run_cmd->add_option("--domain", run.domain_path, "Domain file, one value per line")
      ->required();
  run_cmd->add_option("--relations", run.relation_paths, "Owner relation CSVs")
      ->required();
  run_cmd->add_option("--scheme", run.scheme, "prism | kaleido-rnd | kaleido-aes");
  run_cmd->add_option("--transport", run.transport, "inproc | tcp");
  run_cmd->add_option("--seed", run.seed, "Deterministic randomness seed");
  run_cmd->add_option("--out", run.out, "Write stage timings as CSV");

  kaleido::GenCommand gen;
  CLI::App* gen_cmd = app.add_subcommand("gen", "Generate a synthetic workload");
  gen_cmd->add_option("--workload", gen.workload, "uniform | skewed");
  gen_cmd->add_option("--n", gen.n, "Domain size");
  gen_cmd->add_option("--m", gen.m, "Number of owners");
  gen_cmd->add_option("--count", gen.count, "Values per owner");
  gen_cmd->add_option("--seed", gen.seed, "Generator seed");
  gen_cmd->add_option("--out", gen.out_dir, "Output directory");

  kaleido::BenchCommand bench;
  CLI::App* bench_cmd = app.add_subcommand("bench", "Benchmark the schemes");
  bench_cmd->add_option("--config", bench.config_path, "Run configuration file");
  bench_cmd->add_option("--workload", bench.workload, "uniform | skewed");
  bench_cmd->add_option("--n", bench.n, "Domain size");
  bench_cmd->add_option("--m", bench.m, "Number of owners");
  bench_cmd->add_option("--count", bench.count, "Values per owner");
  bench_cmd->add_option("--schemes", bench.schemes, "Comma-separated schemes");
  bench_cmd->add_option("--reps", bench.repetitions, "Repetitions per scheme");
  bench_cmd->add_option("--seed", bench.seed, "Seed");
  bench_cmd->add_option("--transport", bench.transport, "inproc | tcp");
  bench_cmd->add_option("--out", bench.out, "Write results as CSV");

  kaleido::AttackCommand attack;
  CLI::App* attack_cmd =
      app.add_subcommand("attack", "Leakage analysis or the CPA game");
  attack_cmd->add_option("--config", attack.config_path, "Run configuration file");
  attack_cmd->add_option("--mode", attack.mode, "leakage | cpa");
  attack_cmd->add_option("--trials", attack.trials, "CPA game trials");
  attack_cmd->add_option("--scheme", attack.scheme,
                         "prism | kaleido-rnd | kaleido-aes");
  attack_cmd->add_option("--domain", attack.domain_path, "Domain file");
  attack_cmd->add_option("--relations", attack.relation_paths, "Owner relation CSVs");
  attack_cmd->add_option("--n", attack.n, "Generated domain size");
  attack_cmd->add_option("--m", attack.m, "Generated owner count");
  attack_cmd->add_option("--seed", attack.seed, "Seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (*run_cmd) return kaleido::CmdRun(run, std::cout, std::cerr);
  if (*gen_cmd) return kaleido::CmdGen(gen, std::cout, std::cerr);
  if (*bench_cmd) return kaleido::CmdBench(bench, std::cout, std::cerr);
  if (*attack_cmd) return kaleido::CmdAttack(attack, std::cout, std::cerr);
  return 2;
}
