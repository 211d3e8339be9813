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

#include <array>

#include "absl/strings/str_cat.h"
#include "kaleido/status.h"

namespace kaleido {
namespace {

using Clock = std::chrono::steady_clock;

std::chrono::nanoseconds Since(Clock::time_point start) {
  return std::chrono::duration_cast<std::chrono::nanoseconds>(Clock::now() -
                                                              start);
}

}  // namespace

absl::StatusOr<EncodedVector> Combine(const EncodedVector& u0,
                                      const EncodedVector& u1,
                                      const GroupParams& params) {
  if (u0.size() != u1.size()) {
    return ProtocolError(absl::StrCat("encoded vectors differ in length: ",
                                      u0.size(), " vs ", u1.size()));
  }
  EncodedVector out;
  out.elements.reserve(u0.size());
  for (size_t i = 0; i < u0.size(); ++i) {
    const BigInt& a = u0.elements[i];
    const BigInt& b = u1.elements[i];
    if (a < 1 || a >= params.q || b < 1 || b >= params.q) {
      return ProtocolError(absl::StrCat("encoding at position ", i,
                                        " outside [1, q-1]"));
    }
    out.elements.push_back(ReduceMod(a * b, params.q));
  }
  return out;
}

absl::StatusOr<PsiResult> ExtractPsi(const EncodedVector& combined,
                                     const DomainCatalog& catalog) {
  if (combined.size() != catalog.size()) {
    return ProtocolError(absl::StrCat("combined vector has length ",
                                      combined.size(), ", domain has ",
                                      catalog.size()));
  }
  PsiResult out;
  for (size_t i = 0; i < combined.size(); ++i) {
    if (combined.elements[i] == 1) {
      out.positions.insert(i);
      out.values.push_back(catalog.value(i));
    }
  }
  return out;
}

absl::StatusOr<ClientResult> ClientRun(const ClientInput& input,
                                       const DomainCatalog& catalog,
                                       const ClientConfig& config,
                                       Transport& transport,
                                       RandomSource& random,
                                       std::chrono::milliseconds timeout) {
  if (catalog.size() != config.n) {
    return ParameterError(absl::StrCat("client ", config.client_id,
                                       ": domain has ", catalog.size(),
                                       " values, config says ", config.n));
  }
  const EndpointId self = static_cast<EndpointId>(config.client_id);
  ClientResult result;
  result.client_id = config.client_id;

  auto start = Clock::now();
  Relation relation;
  if (input.path.has_value()) {
    KALEIDO_ASSIGN_OR_RETURN(relation,
                             LoadRelationCsv(*input.path, config.client_id));
  } else {
    relation = input.relation;
    relation.owner_id = config.client_id;
  }
  result.timings.push_back({"Load", Since(start)});

  start = Clock::now();
  KALEIDO_ASSIGN_OR_RETURN(result.local, Vectorize(relation, catalog));
  result.timings.push_back({"Hash", Since(start)});

  start = Clock::now();
  KALEIDO_ASSIGN_OR_RETURN(auto shares,
                           SplitVector(result.local, config.params, random));
  result.timings.push_back({"Split", Since(start)});

  KALEIDO_RETURN_IF_ERROR(transport.Send(
      kServer0Endpoint, Frame{.type = MessageType::kShareVector,
                              .sender = self,
                              .elements = std::move(shares.first.elements)}));
  KALEIDO_RETURN_IF_ERROR(transport.Send(
      kServer1Endpoint, Frame{.type = MessageType::kShareVector,
                              .sender = self,
                              .elements = std::move(shares.second.elements)}));

  std::array<std::optional<EncodedVector>, 2> broadcasts;
  const auto deadline = Clock::now() + timeout;
  while (!broadcasts[0].has_value() || !broadcasts[1].has_value()) {
    auto remaining = std::chrono::duration_cast<std::chrono::milliseconds>(
        deadline - Clock::now());
    if (remaining.count() < 0) remaining = std::chrono::milliseconds(0);
    absl::StatusOr<Frame> frame = transport.Receive(self, remaining);
    if (!frame.ok()) {
      if (absl::IsDeadlineExceeded(frame.status())) {
        return ProtocolError(absl::StrCat(EndpointName(self),
                                          ": timed out waiting for ",
                                          broadcasts[0] ? "S1" : "S0",
                                          " broadcast"));
      }
      return frame.status();
    }
    if (frame->type == MessageType::kControl) {
      return ProtocolError(absl::StrCat(EndpointName(self),
                                        ": run aborted by ",
                                        EndpointName(frame->sender)));
    }
    if (frame->type != MessageType::kEncodedVector ||
        !IsServerEndpoint(frame->sender)) {
      return ProtocolError(absl::StrCat(EndpointName(self),
                                        ": unexpected frame from ",
                                        EndpointName(frame->sender)));
    }
    const int b = frame->sender == kServer0Endpoint ? 0 : 1;
    if (broadcasts[b].has_value()) {
      return ProtocolError(absl::StrCat(EndpointName(self),
                                        ": duplicate broadcast from ",
                                        EndpointName(frame->sender)));
    }
    KALEIDO_RETURN_IF_ERROR(ValidateFrameElements(*frame, config.params));
    broadcasts[b] = EncodedVector{.server_index = b,
                                  .elements = std::move(frame->elements)};
  }

  start = Clock::now();
  if (broadcasts[0]->size() != config.n || broadcasts[1]->size() != config.n) {
    return ProtocolError(absl::StrCat(EndpointName(self),
                                      ": broadcast lengths ",
                                      broadcasts[0]->size(), " and ",
                                      broadcasts[1]->size(), ", expected ",
                                      config.n));
  }
  KALEIDO_ASSIGN_OR_RETURN(result.combined,
                           Combine(*broadcasts[0], *broadcasts[1], config.params));
  KALEIDO_ASSIGN_OR_RETURN(result.psi, ExtractPsi(result.combined, catalog));
  result.timings.push_back({"Recover", Since(start)});
  return result;
}

}  // namespace kaleido
