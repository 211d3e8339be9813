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

#include "kaleido/client.h"

#include <gtest/gtest.h>

#include "kaleido/audit.h"
#include "kaleido/transport.h"
#include "testing/oracles.h"

namespace kaleido {
namespace {

using testing::ToBigInts;
using testing::ToLongs;

const GroupParams kSmall{BigInt(5), BigInt(11)};

EncodedVector Enc(int server, std::vector<long> v) {
  return EncodedVector{server, ToBigInts(v)};
}

TEST(CombineTest, WorkedExamples) {
  EXPECT_EQ(ToLongs(Combine(Enc(0, {1, 9, 1, 5, 4}), Enc(1, {9, 9, 9, 9, 1}), kSmall)
                        ->elements),
            (std::vector<long>{9, 4, 9, 1, 4}));
  EXPECT_EQ(ToLongs(Combine(Enc(0, {1, 9, 1, 4, 9}), Enc(1, {4, 9, 5, 3, 1}), kSmall)
                        ->elements),
            (std::vector<long>{4, 4, 5, 1, 9}));
  EXPECT_EQ(ToLongs(Combine(Enc(0, {1, 1}), Enc(1, {1, 1}), kSmall)->elements),
            (std::vector<long>{1, 1}));
  EXPECT_EQ(Combine(Enc(0, {1, 1}), Enc(1, {1, 1}), kSmall)->server_index, -1);
}

TEST(CombineTest, LengthMismatchIsProtocolError) {
  EXPECT_EQ(Combine(Enc(0, {1, 1}), Enc(1, {1}), kSmall).status().code(),
            absl::StatusCode::kAborted);
}

TEST(ExtractPsiTest, Examples) {
  const DomainCatalog catalog = DomainCatalog::Range(5);
  PsiResult a = ExtractPsi(Enc(-1, {9, 4, 9, 1, 4}), catalog).value();
  EXPECT_EQ(a.positions, (std::set<size_t>{3}));
  EXPECT_EQ(a.values, (std::vector<std::string>{"3"}));
  EXPECT_EQ(ExtractPsi(Enc(-1, {4, 4, 5, 1, 9}), catalog)->positions,
            (std::set<size_t>{3}));
  EXPECT_TRUE(ExtractPsi(Enc(-1, {2, 3, 4, 5, 6}), catalog)->positions.empty());
  EXPECT_FALSE(ExtractPsi(Enc(-1, {1}), catalog).ok());
}

class ClientRunTest : public ::testing::Test {
 protected:
  ClientRunTest() : transport_(std::make_shared<AuditLog>()) {}

  ClientConfig Config(int id) {
    return ClientProjection(testing::WorkedExampleConfig(), id);
  }

  InProcTransport transport_;
  testing::WorkedExample ex_ = testing::MakeWorkedExample();
};

TEST_F(ClientRunTest, SendsSharesAndAcceptsBroadcastsInEitherOrder) {
  // Server 1 answers first.
  ASSERT_TRUE(transport_
                  .Send(0, Frame{MessageType::kEncodedVector, kServer1Endpoint,
                                 ToBigInts({9, 9, 9, 9, 1})})
                  .ok());
  ASSERT_TRUE(transport_
                  .Send(0, Frame{MessageType::kEncodedVector, kServer0Endpoint,
                                 ToBigInts({1, 9, 1, 5, 4})})
                  .ok());
  ScriptedRandom random({3, 4, 1, 2, 0});
  auto result = ClientRun(ClientInput{{}, ex_.relations[0]}, ex_.catalog, Config(0),
                          transport_, random);
  ASSERT_TRUE(result.ok()) << result.status();
  EXPECT_EQ(ToLongs(result->combined.elements), (std::vector<long>{9, 4, 9, 1, 4}));
  EXPECT_EQ(result->psi.values, (std::vector<std::string>{"3"}));
  EXPECT_EQ(result->local, (BitVector{1, 1, 0, 1, 0}));

  auto to_s0 = transport_.Receive(kServer0Endpoint, std::chrono::milliseconds(10));
  auto to_s1 = transport_.Receive(kServer1Endpoint, std::chrono::milliseconds(10));
  ASSERT_TRUE(to_s0.ok() && to_s1.ok());
  EXPECT_EQ(ToLongs(to_s0->elements), (std::vector<long>{3, 4, 1, 2, 0}));
  EXPECT_EQ(ToLongs(to_s1->elements), (std::vector<long>{3, 2, 4, 4, 0}));

  std::vector<std::string> stages;
  for (const StageTiming& t : result->timings) stages.push_back(t.stage);
  EXPECT_EQ(stages, (std::vector<std::string>{"Load", "Hash", "Split", "Recover"}));
}

TEST_F(ClientRunTest, TimeoutNamesMissingServer) {
  ASSERT_TRUE(transport_
                  .Send(1, Frame{MessageType::kEncodedVector, kServer0Endpoint,
                                 ToBigInts({1, 1, 1, 1, 1})})
                  .ok());
  SeededRandom random(1);
  auto result = ClientRun(ClientInput{{}, ex_.relations[1]}, ex_.catalog, Config(1),
                          transport_, random, std::chrono::milliseconds(50));
  EXPECT_EQ(result.status().code(), absl::StatusCode::kAborted);
  EXPECT_NE(result.status().message().find("S1"), absl::string_view::npos)
      << result.status();
}

TEST_F(ClientRunTest, BroadcastLengthMismatch) {
  ASSERT_TRUE(transport_
                  .Send(2, Frame{MessageType::kEncodedVector, kServer0Endpoint,
                                 ToBigInts({1, 1, 1, 1, 1})})
                  .ok());
  ASSERT_TRUE(transport_
                  .Send(2, Frame{MessageType::kEncodedVector, kServer1Endpoint,
                                 ToBigInts({1, 1, 1})})
                  .ok());
  SeededRandom random(1);
  auto result = ClientRun(ClientInput{{}, ex_.relations[2]}, ex_.catalog, Config(2),
                          transport_, random);
  EXPECT_EQ(result.status().code(), absl::StatusCode::kAborted);
}

TEST_F(ClientRunTest, UnknownItemFailsBeforeSending) {
  SeededRandom random(1);
  auto result = ClientRun(ClientInput{{}, Relation{0, {"7"}}}, ex_.catalog,
                          Config(0), transport_, random);
  EXPECT_FALSE(result.ok());
  EXPECT_EQ(transport_.audit()->size(), 0u);
}

TEST_F(ClientRunTest, MissingRelationFileIsIoError) {
  SeededRandom random(1);
  auto result = ClientRun(ClientInput{"/nonexistent/r.csv", {}}, ex_.catalog,
                          Config(0), transport_, random);
  EXPECT_EQ(result.status().code(), absl::StatusCode::kNotFound);
}

}  // namespace
}  // namespace kaleido
