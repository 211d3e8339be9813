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

#include <map>
#include <random>
#include <thread>

#include <gtest/gtest.h>

#include "kaleido/audit.h"
#include "kaleido/frame.h"
#include "kaleido/protocol.h"
#include "kaleido/tcp_transport.h"
#include "kaleido/transport.h"
#include "testing/oracles.h"

namespace kaleido {
namespace {

using testing::ToBigInts;

const GroupParams kDesk{BigInt(113), BigInt(227)};

bool HasSubstr(const absl::Status& s, std::string_view needle) {
  return std::string(s.message()).find(needle) != std::string::npos;
}

TEST(FrameTest, ShareVectorLayout) {
  const Frame frame{MessageType::kShareVector, 0, ToBigInts({3, 4, 1, 2, 0})};
  const std::vector<uint8_t> bytes = EncodeFrame(frame).value();
  const std::vector<uint8_t> expected = {
      0x4B, 0x50, 0x53, 0x49, 0x01, 0x01, 0x00, 0x00, 0x00, 0x00, 0x00, 0x05,
      0x00, 0x01, 0x03, 0x00, 0x01, 0x04, 0x00, 0x01, 0x01,
      0x00, 0x01, 0x02, 0x00, 0x01, 0x00};
  EXPECT_EQ(bytes, expected);
  EXPECT_EQ(DecodeFrame(bytes).value(), frame);
}

TEST(FrameTest, SenderAndMultiByteElements) {
  const Frame frame{MessageType::kEncodedVector, kServer1Endpoint,
                    {BigInt(256), BigInt(65535)}};
  const std::vector<uint8_t> bytes = EncodeFrame(frame).value();
  const std::vector<uint8_t> expected = {
      0x4B, 0x50, 0x53, 0x49, 0x01, 0x02, 0xFF, 0xF1, 0x00, 0x00, 0x00, 0x02,
      0x00, 0x02, 0x01, 0x00, 0x00, 0x02, 0xFF, 0xFF};
  EXPECT_EQ(bytes, expected);
}

TEST(FrameTest, EmptyVector) {
  const Frame frame{MessageType::kControl, kOracleEndpoint, {}};
  const std::vector<uint8_t> bytes = EncodeFrame(frame).value();
  EXPECT_EQ(bytes.size(), kFrameHeaderSize);
  EXPECT_EQ(bytes[11], 0x00);
  EXPECT_EQ(DecodeFrame(bytes).value(), frame);
}

TEST(FrameTest, RandomRoundTrips) {
  std::mt19937_64 rng(10000);
  SeededRandom random(10000);
  const MessageType types[] = {MessageType::kShareVector,
                               MessageType::kEncodedVector, MessageType::kRndSeed,
                               MessageType::kControl};
  for (int t = 0; t < 10000; ++t) {
    Frame frame;
    frame.type = types[rng() % 4];
    frame.sender = static_cast<EndpointId>(rng());
    const size_t count = rng() % 12;
    for (size_t i = 0; i < count; ++i) {
      const int bits = 1 + rng() % 256;
      frame.elements.push_back(random.UniformBelow(BigInt(1) << bits));
    }
    auto bytes = EncodeFrame(frame);
    ASSERT_TRUE(bytes.ok()) << bytes.status();
    auto decoded = DecodeFrame(*bytes);
    ASSERT_TRUE(decoded.ok()) << decoded.status();
    ASSERT_EQ(*decoded, frame) << "case " << t;
    ASSERT_EQ(EncodeFrame(*decoded).value(), *bytes);
  }
}

TEST(FrameTest, DecodeErrorsCarryOffsets) {
  const std::vector<uint8_t> good =
      EncodeFrame(Frame{MessageType::kShareVector, 1, ToBigInts({7, 300})}).value();
  auto expect_error = [](std::vector<uint8_t> bytes, std::string_view needle) {
    auto decoded = DecodeFrame(bytes);
    EXPECT_EQ(decoded.status().code(), absl::StatusCode::kDataLoss) << needle;
    EXPECT_TRUE(HasSubstr(decoded.status(), needle)) << decoded.status();
  };
  auto bad = good;
  bad[2] = 0x00;
  expect_error(bad, "bad magic at offset 2");
  bad = good;
  bad[4] = 0x02;
  expect_error(bad, "unknown version 2 at offset 4");
  bad = good;
  bad[5] = 0x09;
  expect_error(bad, "unknown message type 9 at offset 5");
  expect_error({good.begin(), good.begin() + 7}, "truncated header");
  expect_error({good.begin(), good.end() - 1}, "truncated element 1");
  bad = good;
  bad.push_back(0x00);
  expect_error(bad, "1 trailing bytes");
  // Count claims 3 elements, only 2 present.
  bad = good;
  bad[11] = 0x03;
  expect_error(bad, "truncated length prefix of element 2");
  // 7 re-encoded as two bytes 00 07.
  bad = {0x4B, 0x50, 0x53, 0x49, 0x01, 0x01, 0x00, 0x00, 0x00, 0x00, 0x00, 0x01,
         0x00, 0x02, 0x00, 0x07};
  expect_error(bad, "non-minimal element 0 at offset 14");
  bad = {0x4B, 0x50, 0x53, 0x49, 0x01, 0x01, 0x00, 0x00, 0x00, 0x00, 0x00, 0x01,
         0x00, 0x00};
  expect_error(bad, "zero-length element 0");
}

TEST(FrameTest, EncodeRejectsNegativeAndHugeElements) {
  EXPECT_FALSE(EncodeFrame(Frame{MessageType::kShareVector, 0, {BigInt(-1)}}).ok());
  EXPECT_FALSE(
      EncodeFrame(Frame{MessageType::kShareVector, 0, {BigInt(1) << (8 * 65536)}})
          .ok());
  EXPECT_TRUE(
      EncodeFrame(Frame{MessageType::kShareVector, 0, {(BigInt(1) << (8 * 65535)) - 1}})
          .ok());
}

TEST(FrameTest, ElementRangesPerType) {
  const GroupParams params{BigInt(5), BigInt(11)};
  EXPECT_TRUE(ValidateFrameElements(
                  Frame{MessageType::kShareVector, 0, ToBigInts({0, 4})}, params)
                  .ok());
  EXPECT_FALSE(ValidateFrameElements(
                   Frame{MessageType::kShareVector, 0, ToBigInts({5})}, params)
                   .ok());
  EXPECT_TRUE(ValidateFrameElements(
                  Frame{MessageType::kEncodedVector, 0, ToBigInts({1, 10})}, params)
                  .ok());
  EXPECT_FALSE(ValidateFrameElements(
                   Frame{MessageType::kEncodedVector, 0, ToBigInts({0})}, params)
                   .ok());
  EXPECT_FALSE(ValidateFrameElements(
                   Frame{MessageType::kEncodedVector, 0, ToBigInts({11})}, params)
                   .ok());
}

TEST(EndpointTest, Names) {
  EXPECT_EQ(EndpointName(kServer0Endpoint), "S0");
  EXPECT_EQ(EndpointName(kServer1Endpoint), "S1");
  EXPECT_EQ(EndpointName(kOracleEndpoint), "oracle");
  EXPECT_EQ(EndpointName(3), "C3");
  EXPECT_TRUE(IsClientEndpoint(kMaxClientEndpoint));
  EXPECT_FALSE(IsClientEndpoint(kServer0Endpoint));
  EXPECT_TRUE(IsServerEndpoint(kServer1Endpoint));
}

TEST(AuditTest, NonCollusionRules) {
  auto record = [](AuditLog& log, EndpointId from, EndpointId to, MessageType t) {
    log.Record(AuditRecord{from, to, t, std::vector<uint8_t>(12, 0)});
  };
  AuditLog clean;
  record(clean, 0, kServer0Endpoint, MessageType::kShareVector);
  record(clean, kServer0Endpoint, 0, MessageType::kEncodedVector);
  EXPECT_TRUE(clean.CheckNonCollusion(Scheme::kKaleidoAes).ok());
  EXPECT_TRUE(clean.CheckNonCollusion(Scheme::kPrism).ok());
  // Kaleido-RND needs its one seed frame.
  EXPECT_FALSE(clean.CheckNonCollusion(Scheme::kKaleidoRnd).ok());

  AuditLog seeded;
  record(seeded, kServer0Endpoint, kServer1Endpoint, MessageType::kRndSeed);
  EXPECT_TRUE(seeded.CheckNonCollusion(Scheme::kKaleidoRnd).ok());
  EXPECT_FALSE(seeded.CheckNonCollusion(Scheme::kKaleidoAes).ok());
  record(seeded, kServer0Endpoint, kServer1Endpoint, MessageType::kRndSeed);
  EXPECT_FALSE(seeded.CheckNonCollusion(Scheme::kKaleidoRnd).ok());

  AuditLog reverse;
  record(reverse, kServer1Endpoint, kServer0Endpoint, MessageType::kRndSeed);
  EXPECT_FALSE(reverse.CheckNonCollusion(Scheme::kKaleidoRnd).ok());
}

TEST(AuditTest, SummaryCountsBytesAndRounds) {
  AuditLog log;
  log.Record({0, kServer0Endpoint, MessageType::kShareVector, std::vector<uint8_t>(20)});
  log.Record({0, kServer1Endpoint, MessageType::kShareVector, std::vector<uint8_t>(21)});
  log.Record({kServer0Endpoint, 0, MessageType::kEncodedVector, std::vector<uint8_t>(30)});
  TrafficSummary s = log.Summarize();
  EXPECT_EQ(s.upstream_frames, 2u);
  EXPECT_EQ(s.upstream_bytes, 41u);
  EXPECT_EQ(s.downstream_frames, 1u);
  EXPECT_EQ(s.downstream_bytes, 30u);
  EXPECT_EQ(s.rounds, 1u);
  log.Record({0, kServer0Endpoint, MessageType::kShareVector, std::vector<uint8_t>(20)});
  EXPECT_EQ(log.Summarize().rounds, 2u);
}

TEST(InProcTransportTest, DeliversInOrderAndAudits) {
  auto audit = std::make_shared<AuditLog>();
  InProcTransport transport(audit);
  ASSERT_TRUE(transport.Send(kServer0Endpoint, Frame{MessageType::kShareVector, 1, ToBigInts({1})}).ok());
  ASSERT_TRUE(transport.Send(kServer0Endpoint, Frame{MessageType::kShareVector, 2, ToBigInts({2})}).ok());
  EXPECT_EQ(transport.Receive(kServer0Endpoint, std::chrono::milliseconds(10))->sender, 1);
  EXPECT_EQ(transport.Receive(kServer0Endpoint, std::chrono::milliseconds(10))->sender, 2);
  EXPECT_EQ(transport.Receive(kServer0Endpoint, std::chrono::milliseconds(10)).status().code(),
            absl::StatusCode::kDeadlineExceeded);
  EXPECT_EQ(audit->size(), 2u);
}

TEST(TcpTransportTest, ParseHostPort) {
  auto hp = ParseHostPort("127.0.0.1:8080").value();
  EXPECT_EQ(hp.first, "127.0.0.1");
  EXPECT_EQ(hp.second, 8080);
  EXPECT_FALSE(ParseHostPort("localhost").ok());
  EXPECT_FALSE(ParseHostPort("h:99999").ok());
  EXPECT_FALSE(ParseHostPort("h:x").ok());
}

TEST(TcpTransportTest, DeliversAcrossSockets) {
  auto audit = std::make_shared<AuditLog>();
  auto transport = TcpTransport::Create(
      {{kServer0Endpoint, "127.0.0.1:0"}, {0, "127.0.0.1:0"}}, audit);
  ASSERT_TRUE(transport.ok()) << transport.status();
  EXPECT_NE((*transport)->BoundAddress(kServer0Endpoint).value(), "127.0.0.1:0");
  SeededRandom random(1);
  Frame big{MessageType::kShareVector, 0, {}};
  for (int i = 0; i < 5000; ++i) big.elements.push_back(random.UniformBelow(BigInt(1) << 200));
  ASSERT_TRUE((*transport)->Send(kServer0Endpoint, big).ok());
  ASSERT_TRUE((*transport)->Send(kServer0Endpoint, Frame{MessageType::kControl, 0, {}}).ok());
  auto first = (*transport)->Receive(kServer0Endpoint, std::chrono::seconds(5));
  ASSERT_TRUE(first.ok()) << first.status();
  EXPECT_EQ(*first, big);
  EXPECT_EQ((*transport)->Receive(kServer0Endpoint, std::chrono::seconds(5))->type,
            MessageType::kControl);
  EXPECT_EQ(audit->size(), 2u);
}

TEST(TcpTransportTest, ErrorsNameTheEndpoint) {
  auto audit = std::make_shared<AuditLog>();
  auto transport = TcpTransport::Create({{kServer0Endpoint, "127.0.0.1:0"}}, audit).value();
  absl::Status unknown = transport->Send(kServer1Endpoint, Frame{MessageType::kControl, 0, {}});
  EXPECT_EQ(unknown.code(), absl::StatusCode::kUnavailable);
  EXPECT_TRUE(HasSubstr(unknown, "S1")) << unknown;

  const std::string taken = transport->BoundAddress(kServer0Endpoint).value();
  auto clash = TcpTransport::Create({{kServer1Endpoint, taken}}, audit);
  EXPECT_EQ(clash.status().code(), absl::StatusCode::kUnavailable);
  EXPECT_TRUE(HasSubstr(clash.status(), "S1")) << clash.status();
}

// Per-edge frame bytes of one seeded run.
std::map<std::tuple<EndpointId, EndpointId, MessageType>, std::vector<std::vector<uint8_t>>>
RunAndCollect(Scheme scheme, TransportBackend backend) {
  std::mt19937_64 rng(77);
  const auto relations = testing::RandomRelations(rng, 4, 30, 0.7);
  const DomainCatalog catalog = DomainCatalog::Range(30);
  SeededRandom oracle(77);
  const RunConfig config = MakeRunConfig(scheme, kDesk, 4, 30, oracle).value();
  auto audit = std::make_shared<AuditLog>();
  EndpointAddresses addresses;
  addresses[kServer0Endpoint] = "127.0.0.1:0";
  addresses[kServer1Endpoint] = "127.0.0.1:0";
  for (EndpointId c = 0; c < 4; ++c) addresses[c] = "127.0.0.1:0";
  auto transport = MakeAuditedTransport(backend, audit, addresses).value();
  std::vector<ClientInput> inputs;
  for (const Relation& r : relations) inputs.push_back(ClientInput{{}, r});
  auto report = RunDistributed(config, inputs, catalog, *transport, [](int c) {
    return std::make_unique<SeededRandom>(1000 + c);
  });
  EXPECT_TRUE(report.ok()) << report.status();
  std::map<std::tuple<EndpointId, EndpointId, MessageType>, std::vector<std::vector<uint8_t>>>
      edges;
  for (const AuditRecord& r : audit->Records()) {
    edges[{r.sender, r.receiver, r.type}].push_back(r.bytes);
  }
  return edges;
}

TEST(BackendEquivalenceTest, InProcAndTcpCarryIdenticalBytes) {
  for (Scheme scheme : {Scheme::kPrism, Scheme::kKaleidoRnd, Scheme::kKaleidoAes}) {
    const auto inproc = RunAndCollect(scheme, TransportBackend::kInProc);
    const auto tcp = RunAndCollect(scheme, TransportBackend::kTcp);
    EXPECT_EQ(inproc.size(), scheme == Scheme::kKaleidoRnd ? 17u : 16u);
    EXPECT_EQ(inproc, tcp) << SchemeName(scheme);
  }
}

TEST(TrafficAccountingTest, TwoMFramesEachWayInOneRound) {
  for (int m : {1, 2, 4, 7}) {
    std::mt19937_64 rng(m);
    const auto relations = testing::RandomRelations(rng, m, 20, 0.8);
    SeededRandom oracle(m);
    const RunConfig config =
        MakeRunConfig(Scheme::kPrism, kDesk, m, 20, oracle).value();
    auto audit = std::make_shared<AuditLog>();
    InProcTransport transport(audit);
    std::vector<ClientInput> inputs;
    for (const Relation& r : relations) inputs.push_back(ClientInput{{}, r});
    auto report = RunDistributed(config, inputs, DomainCatalog::Range(20), transport,
                                 [](int c) { return std::make_unique<SeededRandom>(c); });
    ASSERT_TRUE(report.ok()) << report.status();
    const TrafficSummary s = audit->Summarize();
    EXPECT_EQ(s.upstream_frames, 2u * m);
    EXPECT_EQ(s.downstream_frames, 2u * m);
    EXPECT_EQ(s.server_to_server_frames, 0u);
    EXPECT_EQ(s.other_frames, 0u);
    EXPECT_EQ(s.rounds, 1u);
  }
}

}  // namespace
}  // namespace kaleido
