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

#include "kaleido/server.h"

#include <map>
#include <set>

#include "absl/strings/str_cat.h"
#include "absl/strings/str_join.h"
#include "kaleido/status.h"

namespace kaleido {
namespace {

using Clock = std::chrono::steady_clock;

BigInt ScanStart(const BigInt& raw, const GroupParams& params) {
  return ReduceMod(raw, params.q - 2) + 2;
}

std::chrono::nanoseconds Since(Clock::time_point start) {
  return std::chrono::duration_cast<std::chrono::nanoseconds>(Clock::now() -
                                                              start);
}

}  // namespace

uint64_t RndStreamValue(uint64_t seed, uint64_t pos) {
  // SplitMix64 is a counter-based stream: the pos-th output depends only on
  // seed + pos * gamma, so positions can be derived independently.
  return Mix64(seed + pos * 0x9E3779B97F4A7C15ull);
}

absl::StatusOr<ShareVector> Aggregate(std::span<const ShareVector> shares,
                                      const BigInt& m_share,
                                      const GroupParams& params) {
  if (shares.empty()) return ProtocolError("no share vectors to aggregate");
  if (sgn(m_share) < 0 || m_share >= params.p) {
    return ParameterError("m share outside [0, p)");
  }
  const size_t n = shares.front().size();
  const int b = shares.front().server_index;
  for (size_t j = 0; j < shares.size(); ++j) {
    if (shares[j].size() != n) {
      return ProtocolError(absl::StrCat("share vector ", j, " has length ",
                                        shares[j].size(), ", expected ", n));
    }
    if (shares[j].server_index != b) {
      return ProtocolError(absl::StrCat("share vector ", j,
                                        " belongs to server ",
                                        shares[j].server_index,
                                        ", expected ", b));
    }
  }
  ShareVector out{.server_index = b, .elements = {}};
  out.elements.reserve(n);
  for (size_t i = 0; i < n; ++i) {
    BigInt sum = -m_share;
    for (const ShareVector& s : shares) sum += s.elements[i];
    out.elements.push_back(ReduceMod(sum, params.p));
  }
  return out;
}

absl::StatusOr<BigInt> DeriveGenerator(const EncoderStrategy& strategy,
                                       uint64_t pos, const GroupParams& params) {
  struct Visitor {
    uint64_t pos;
    const GroupParams& params;

    absl::StatusOr<BigInt> operator()(const PrismEncoder& e) const {
      return e.generator;
    }
    absl::StatusOr<BigInt> operator()(const KaleidoRndEncoder& e) const {
      BigInt raw = BigIntFromUint64(RndStreamValue(e.seed, pos));
      return NextOrderPGenerator(ScanStart(raw, params), params);
    }
    absl::StatusOr<BigInt> operator()(const KaleidoAesEncoder& e) const {
      if (e.prf == nullptr) return ParameterError("Kaleido-AES without a PRF");
      KALEIDO_ASSIGN_OR_RETURN(BigInt ct, e.prf->Eval(BigIntFromUint64(pos)));
      return NextOrderPGenerator(ScanStart(ct, params), params);
    }
    absl::StatusOr<BigInt> operator()(const InjectedEncoder& e) const {
      if (pos >= e.generators.size()) {
        return ParameterError(absl::StrCat("no injected generator for position ",
                                           pos));
      }
      return e.generators[pos];
    }
  };
  return std::visit(Visitor{pos, params}, strategy);
}

absl::StatusOr<EncodedVector> Encode(const ShareVector& aggregated,
                                     const EncoderStrategy& strategy,
                                     const GroupParams& params) {
  EncodedVector out{.server_index = aggregated.server_index, .elements = {}};
  out.elements.reserve(aggregated.size());
  for (size_t i = 0; i < aggregated.size(); ++i) {
    KALEIDO_ASSIGN_OR_RETURN(BigInt g, DeriveGenerator(strategy, i, params));
    KALEIDO_ASSIGN_OR_RETURN(BigInt u,
                             ModExp(g, aggregated.elements[i], params.q));
    out.elements.push_back(std::move(u));
  }
  return out;
}

absl::StatusOr<EncoderStrategy> StrategyFor(const ServerConfig& config,
                                            std::optional<uint64_t> received_seed) {
  switch (config.scheme) {
    case Scheme::kPrism:
      if (!config.fixed_generator.has_value()) {
        return ParameterError("Prism config without a generator");
      }
      return EncoderStrategy(PrismEncoder{*config.fixed_generator});
    case Scheme::kKaleidoAes:
      if (!config.prf_key.has_value()) {
        return ParameterError("Kaleido-AES config without a PRF key");
      }
      return EncoderStrategy(KaleidoAesEncoder{
          std::make_shared<AesPrf>(*config.prf_key, config.protocol_iv)});
    case Scheme::kKaleidoRnd: {
      std::optional<uint64_t> seed =
          config.rnd_seed.has_value() ? config.rnd_seed : received_seed;
      if (!seed.has_value()) {
        return ParameterError("Kaleido-RND server has no seed");
      }
      return EncoderStrategy(KaleidoRndEncoder{*seed});
    }
  }
  return ParameterError("unknown scheme");
}

absl::StatusOr<ServerResult> ServerRun(const ServerConfig& config,
                                       Transport& transport,
                                       const ServerRunOptions& options) {
  if (config.m < 1) return ProtocolError("server expects at least one client");
  const EndpointId self = ServerEndpoint(config.index);
  const bool rnd = config.scheme == Scheme::kKaleidoRnd;
  ServerResult result;
  result.server_index = config.index;

  if (rnd && config.index == 0 && !options.strategy.has_value()) {
    if (!config.rnd_seed.has_value()) {
      return ParameterError("server 0 has no Kaleido-RND seed to share");
    }
    Frame seed_frame{.type = MessageType::kRndSeed,
                     .sender = self,
                     .elements = {BigIntFromUint64(*config.rnd_seed)}};
    KALEIDO_RETURN_IF_ERROR(transport.Send(kServer1Endpoint, seed_frame));
  }

  // Receive.
  auto start = Clock::now();
  const auto deadline = start + options.timeout;
  std::map<int, ShareVector> inbox;
  std::optional<uint64_t> received_seed;
  const bool needs_seed = rnd && config.index == 1 && !options.strategy.has_value();
  while (static_cast<int>(inbox.size()) < config.m ||
         (needs_seed && !received_seed.has_value())) {
    auto remaining = std::chrono::duration_cast<std::chrono::milliseconds>(
        deadline - Clock::now());
    if (remaining.count() < 0) remaining = std::chrono::milliseconds(0);
    absl::StatusOr<Frame> frame = transport.Receive(self, remaining);
    if (!frame.ok()) {
      if (!absl::IsDeadlineExceeded(frame.status())) return frame.status();
      std::vector<std::string> missing;
      for (int c = 0; c < config.m; ++c) {
        if (!inbox.contains(c)) missing.push_back(EndpointName(c));
      }
      if (needs_seed && !received_seed.has_value()) {
        missing.push_back("seed from S0");
      }
      return ProtocolError(absl::StrCat(EndpointName(self),
                                        ": timed out waiting for ",
                                        absl::StrJoin(missing, ", ")));
    }
    if (frame->type == MessageType::kControl) {
      return ProtocolError(absl::StrCat(EndpointName(self),
                                        ": run aborted by ",
                                        EndpointName(frame->sender)));
    }
    if (frame->type == MessageType::kRndSeed &&
        frame->sender == kServer0Endpoint && needs_seed) {
      if (received_seed.has_value() || frame->elements.size() != 1 ||
          !FitsUint64(frame->elements[0])) {
        return ProtocolError("malformed or repeated Kaleido-RND seed frame");
      }
      received_seed = ToUint64(frame->elements[0]);
      continue;
    }
    if (frame->type != MessageType::kShareVector ||
        !IsClientEndpoint(frame->sender)) {
      return ProtocolError(absl::StrCat(EndpointName(self),
                                        ": unexpected frame type ",
                                        static_cast<int>(frame->type), " from ",
                                        EndpointName(frame->sender)));
    }
    const int client = frame->sender;
    if (client >= config.m) {
      return ProtocolError(absl::StrCat(EndpointName(self), ": unknown client ",
                                        EndpointName(frame->sender)));
    }
    if (inbox.contains(client)) {
      return ProtocolError(absl::StrCat(EndpointName(self),
                                        ": duplicate submission from ",
                                        EndpointName(frame->sender)));
    }
    if (frame->elements.size() != config.n) {
      return ProtocolError(absl::StrCat(
          EndpointName(self), ": ", EndpointName(frame->sender), " sent ",
          frame->elements.size(), " shares, expected ", config.n));
    }
    KALEIDO_RETURN_IF_ERROR(ValidateFrameElements(*frame, config.params));
    inbox.emplace(client, ShareVector{.server_index = config.index,
                                      .elements = std::move(frame->elements)});
  }
  result.timings.push_back({"Receive", Since(start)});

  start = Clock::now();
  std::vector<ShareVector> shares;
  shares.reserve(inbox.size());
  for (auto& [client, vec] : inbox) shares.push_back(std::move(vec));
  KALEIDO_ASSIGN_OR_RETURN(result.aggregated,
                           Aggregate(shares, config.m_share, config.params));
  result.timings.push_back({"Aggregate", Since(start)});

  start = Clock::now();
  EncoderStrategy strategy;
  if (options.strategy.has_value()) {
    strategy = *options.strategy;
  } else {
    KALEIDO_ASSIGN_OR_RETURN(strategy, StrategyFor(config, received_seed));
  }
  KALEIDO_ASSIGN_OR_RETURN(result.encoded,
                           Encode(result.aggregated, strategy, config.params));
  result.timings.push_back({"Encode", Since(start)});

  start = Clock::now();
  Frame out{.type = MessageType::kEncodedVector,
            .sender = self,
            .elements = result.encoded.elements};
  for (int c = 0; c < config.m; ++c) {
    KALEIDO_RETURN_IF_ERROR(transport.Send(static_cast<EndpointId>(c), out));
  }
  result.timings.push_back({"Broadcast", Since(start)});
  return result;
}

}  // namespace kaleido
