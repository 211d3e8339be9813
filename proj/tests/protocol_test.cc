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

#include "kaleido/protocol.h"

#include <random>

#include <gtest/gtest.h>

#include "testing/oracles.h"

namespace kaleido {
namespace {

using testing::ToLongs;

const GroupParams kSmall{BigInt(5), BigInt(11)};
const GroupParams kDesk{BigInt(113), BigInt(227)};
constexpr Scheme kSchemes[] = {Scheme::kPrism, Scheme::kKaleidoRnd,
                               Scheme::kKaleidoAes};

TEST(SimulateTest, WorkedExamplePrism) {
  const testing::WorkedExample ex = testing::MakeWorkedExample();
  auto random = testing::WorkedExampleShareScript();
  auto sim = Simulate(testing::WorkedExampleConfig(), ex.relations, ex.catalog,
                      *random);
  ASSERT_TRUE(sim.ok()) << sim.status();
  EXPECT_EQ(ToLongs(sim->aggregated[0].elements), (std::vector<long>{0, 2, 0, 3, 4}));
  EXPECT_EQ(ToLongs(sim->aggregated[1].elements), (std::vector<long>{2, 2, 2, 2, 0}));
  EXPECT_EQ(ToLongs(sim->encoded[0].elements), (std::vector<long>{1, 9, 1, 5, 4}));
  EXPECT_EQ(ToLongs(sim->encoded[1].elements), (std::vector<long>{9, 9, 9, 9, 1}));
  EXPECT_EQ(ToLongs(sim->combined.elements), (std::vector<long>{9, 4, 9, 1, 4}));
  EXPECT_EQ(sim->psi.positions, (std::set<size_t>{3}));
  EXPECT_EQ(random->remaining(), 0u);
}

TEST(SimulateTest, WorkedExampleInjected) {
  const testing::WorkedExample ex = testing::MakeWorkedExample();
  auto random = testing::WorkedExampleShareScript();
  const InjectedEncoder injected = testing::WorkedExampleInjected();
  auto sim = Simulate(testing::WorkedExampleConfig(), ex.relations, ex.catalog,
                      *random, std::array<EncoderStrategy, 2>{injected, injected});
  ASSERT_TRUE(sim.ok()) << sim.status();
  EXPECT_EQ(ToLongs(sim->encoded[0].elements), (std::vector<long>{1, 9, 1, 4, 9}));
  EXPECT_EQ(ToLongs(sim->encoded[1].elements), (std::vector<long>{4, 9, 5, 3, 1}));
  EXPECT_EQ(ToLongs(sim->combined.elements), (std::vector<long>{4, 4, 5, 1, 9}));
  EXPECT_EQ(sim->psi.positions, (std::set<size_t>{3}));
}

TEST(SimulateTest, WorkedExampleEveryScheme) {
  const testing::WorkedExample ex = testing::MakeWorkedExample();
  for (Scheme scheme : kSchemes) {
    auto random = testing::WorkedExampleShareScript();
    auto sim = Simulate(testing::WorkedExampleConfig(scheme), ex.relations,
                        ex.catalog, *random);
    ASSERT_TRUE(sim.ok()) << sim.status();
    EXPECT_EQ(sim->psi.values, (std::vector<std::string>{"3"}));
  }
}

// Correctness in both directions: U[i] = 1 exactly on the true intersection.
TEST(ProtocolPropertyTest, MatchesNaiveIntersectionOnRandomInstances) {
  std::mt19937_64 rng(500);
  SeededRandom random(500);
  for (int t = 0; t < 500; ++t) {
    const GroupParams& params = (t % 2) ? kSmall : kDesk;
    const int max_m = params.p == 5 ? 4 : 8;
    const int m = 1 + rng() % max_m;
    const size_t n = 1 + rng() % 64;
    const double density = std::uniform_real_distribution<>(0.3, 1.0)(rng);
    const auto relations = testing::RandomRelations(rng, m, n, density);
    const DomainCatalog catalog = DomainCatalog::Range(n);
    std::set<size_t> expected;
    for (const std::string& v : testing::NaiveIntersection(relations)) {
      expected.insert(*catalog.Find(v));
    }
    for (Scheme scheme : kSchemes) {
      const RunConfig config = MakeRunConfig(scheme, params, m, n, random).value();
      auto sim = Simulate(config, relations, catalog, random);
      ASSERT_TRUE(sim.ok()) << sim.status();
      ASSERT_EQ(sim->psi.positions, expected)
          << "trial " << t << " scheme " << SchemeName(scheme);
    }
  }
}

TEST(RunDistributedTest, AllClientsAgreeAndTrafficIsOneRound) {
  std::mt19937_64 rng(9);
  SeededRandom random(9);
  const auto relations = testing::RandomRelations(rng, 5, 40, 0.8);
  const DomainCatalog catalog = DomainCatalog::Range(40);
  std::vector<ClientInput> inputs;
  for (const Relation& r : relations) inputs.push_back(ClientInput{{}, r});
  const std::set<size_t> expected = TrueIntersection(relations, catalog).value();
  for (Scheme scheme : kSchemes) {
    const RunConfig config = MakeRunConfig(scheme, kDesk, 5, 40, random).value();
    auto audit = std::make_shared<AuditLog>();
    InProcTransport transport(audit);
    auto report = RunDistributed(config, inputs, catalog, transport, [](int c) {
      return std::make_unique<SeededRandom>(c);
    });
    ASSERT_TRUE(report.ok()) << report.status();
    ASSERT_EQ(report->clients.size(), 5u);
    for (const ClientResult& c : report->clients) {
      EXPECT_EQ(c.combined, report->clients[0].combined);
      EXPECT_EQ(c.psi.positions, expected);
    }
    EXPECT_EQ(report->traffic.upstream_frames, 10u);
    EXPECT_EQ(report->traffic.downstream_frames, 10u);
    EXPECT_EQ(report->traffic.rounds, 1u);
    EXPECT_TRUE(audit->CheckNonCollusion(scheme).ok());
    EXPECT_EQ(report->traffic.server_to_server_frames,
              scheme == Scheme::kKaleidoRnd ? 1u : 0u);
  }
}

TEST(RunDistributedTest, SingleOwnerGetsOwnSupport) {
  SeededRandom random(1);
  const Relation r{0, {"2", "4", "4"}};
  const DomainCatalog catalog = DomainCatalog::Range(6);
  const RunConfig config = MakeRunConfig(Scheme::kKaleidoAes, kSmall, 1, 6, random).value();
  InProcTransport transport(std::make_shared<AuditLog>());
  auto report = RunDistributed(config, std::vector<ClientInput>{{{}, r}}, catalog,
                               transport,
                               [](int) { return std::make_unique<SeededRandom>(3); });
  ASSERT_TRUE(report.ok()) << report.status();
  EXPECT_EQ(report->clients[0].psi.values, (std::vector<std::string>{"2", "4"}));
}

TEST(RunDistributedTest, FailingClientAbortsEveryoneQuickly) {
  SeededRandom random(1);
  const DomainCatalog catalog = DomainCatalog::Range(5);
  const RunConfig config = MakeRunConfig(Scheme::kPrism, kSmall, 2, 5, random).value();
  InProcTransport transport(std::make_shared<AuditLog>());
  std::vector<ClientInput> inputs = {ClientInput{{}, Relation{0, {"1"}}},
                                     ClientInput{"/nonexistent/c1.csv", {}}};
  const auto start = std::chrono::steady_clock::now();
  auto report = RunDistributed(config, inputs, catalog, transport,
                               [](int c) { return std::make_unique<SeededRandom>(c); });
  EXPECT_EQ(report.status().code(), absl::StatusCode::kNotFound);
  EXPECT_NE(report.status().message().find("c1.csv"), absl::string_view::npos);
  EXPECT_LT(std::chrono::steady_clock::now() - start, std::chrono::seconds(5));
}

TEST(RunDistributedTest, ClientCountMustMatchConfig) {
  SeededRandom random(1);
  const RunConfig config = MakeRunConfig(Scheme::kPrism, kSmall, 3, 5, random).value();
  InProcTransport transport(std::make_shared<AuditLog>());
  std::vector<ClientInput> inputs = {ClientInput{{}, Relation{0, {"1"}}}};
  EXPECT_FALSE(RunDistributed(config, inputs, DomainCatalog::Range(5), transport,
                              [](int c) { return std::make_unique<SeededRandom>(c); })
                   .ok());
}

}  // namespace
}  // namespace kaleido
