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

#include "kaleido/frame.h"

#include <algorithm>

#include "absl/strings/str_cat.h"
#include "absl/strings/str_format.h"
#include "kaleido/status.h"

namespace kaleido {
namespace {

void PutU16(std::vector<uint8_t>& out, uint16_t v) {
  out.push_back(static_cast<uint8_t>(v >> 8));
  out.push_back(static_cast<uint8_t>(v));
}

void PutU32(std::vector<uint8_t>& out, uint32_t v) {
  for (int shift = 24; shift >= 0; shift -= 8) {
    out.push_back(static_cast<uint8_t>(v >> shift));
  }
}

uint16_t GetU16(std::span<const uint8_t> b, size_t at) {
  return static_cast<uint16_t>((b[at] << 8) | b[at + 1]);
}

uint32_t GetU32(std::span<const uint8_t> b, size_t at) {
  return (uint32_t{b[at]} << 24) | (uint32_t{b[at + 1]} << 16) |
         (uint32_t{b[at + 2]} << 8) | uint32_t{b[at + 3]};
}

bool KnownType(uint8_t t) { return t >= 0x01 && t <= 0x04; }

}  // namespace

EndpointId ServerEndpoint(int server_index) {
  return server_index == 0 ? kServer0Endpoint : kServer1Endpoint;
}

bool IsServerEndpoint(EndpointId id) {
  return id == kServer0Endpoint || id == kServer1Endpoint;
}

bool IsClientEndpoint(EndpointId id) { return id <= kMaxClientEndpoint; }

std::string EndpointName(EndpointId id) {
  if (id == kServer0Endpoint) return "S0";
  if (id == kServer1Endpoint) return "S1";
  if (id == kOracleEndpoint) return "oracle";
  if (IsClientEndpoint(id)) return absl::StrCat("C", id);
  return absl::StrFormat("0x%04X", id);
}

absl::StatusOr<std::vector<uint8_t>> EncodeFrame(const Frame& frame) {
  if (frame.elements.size() > UINT32_MAX) {
    return FramingError("too many elements for one frame");
  }
  std::vector<uint8_t> out(kFrameMagic.begin(), kFrameMagic.end());
  out.push_back(kFrameVersion);
  out.push_back(static_cast<uint8_t>(frame.type));
  PutU16(out, frame.sender);
  PutU32(out, static_cast<uint32_t>(frame.elements.size()));
  for (size_t i = 0; i < frame.elements.size(); ++i) {
    const BigInt& e = frame.elements[i];
    if (sgn(e) < 0) {
      return FramingError(absl::StrCat("element ", i, " is negative"));
    }
    std::vector<uint8_t> magnitude = ToBytesBigEndian(e);
    if (magnitude.size() > UINT16_MAX) {
      return FramingError(absl::StrCat("element ", i, " exceeds 65535 bytes"));
    }
    PutU16(out, static_cast<uint16_t>(magnitude.size()));
    out.insert(out.end(), magnitude.begin(), magnitude.end());
  }
  return out;
}

absl::StatusOr<FrameHeader> DecodeFrameHeader(std::span<const uint8_t> bytes) {
  if (bytes.size() < kFrameHeaderSize) {
    return FramingError(absl::StrCat("truncated header at offset ",
                                     bytes.size(), " (need ",
                                     kFrameHeaderSize, " bytes)"));
  }
  for (size_t i = 0; i < kFrameMagic.size(); ++i) {
    if (bytes[i] != kFrameMagic[i]) {
      return FramingError(absl::StrCat("bad magic at offset ", i));
    }
  }
  if (bytes[4] != kFrameVersion) {
    return FramingError(absl::StrCat("unknown version ",
                                     static_cast<int>(bytes[4]),
                                     " at offset 4"));
  }
  if (!KnownType(bytes[5])) {
    return FramingError(absl::StrCat("unknown message type ",
                                     static_cast<int>(bytes[5]),
                                     " at offset 5"));
  }
  return FrameHeader{.type = static_cast<MessageType>(bytes[5]),
                     .sender = GetU16(bytes, 6),
                     .element_count = GetU32(bytes, 8)};
}

absl::StatusOr<Frame> DecodeFrame(std::span<const uint8_t> bytes) {
  KALEIDO_ASSIGN_OR_RETURN(FrameHeader header, DecodeFrameHeader(bytes));
  Frame frame{.type = header.type, .sender = header.sender, .elements = {}};
  // Each element needs at least 3 bytes; cap the reservation accordingly.
  frame.elements.reserve(std::min<size_t>(
      header.element_count, (bytes.size() - kFrameHeaderSize) / 3));
  size_t at = kFrameHeaderSize;
  for (uint32_t i = 0; i < header.element_count; ++i) {
    if (bytes.size() - at < 2) {
      return FramingError(absl::StrCat("truncated length prefix of element ",
                                       i, " at offset ", at));
    }
    uint16_t len = GetU16(bytes, at);
    if (len == 0) {
      return FramingError(absl::StrCat("zero-length element ", i,
                                       " at offset ", at));
    }
    at += 2;
    if (bytes.size() - at < len) {
      return FramingError(absl::StrCat("truncated element ", i, " at offset ",
                                       at));
    }
    if (len > 1 && bytes[at] == 0x00) {
      return FramingError(absl::StrCat("non-minimal element ", i,
                                       " at offset ", at));
    }
    frame.elements.push_back(FromBytesBigEndian(bytes.subspan(at, len)));
    at += len;
  }
  if (at != bytes.size()) {
    return FramingError(absl::StrCat(bytes.size() - at,
                                     " trailing bytes at offset ", at));
  }
  return frame;
}

absl::Status ValidateFrameElements(const Frame& frame,
                                   const GroupParams& params) {
  for (size_t i = 0; i < frame.elements.size(); ++i) {
    const BigInt& e = frame.elements[i];
    switch (frame.type) {
      case MessageType::kShareVector:
        if (e >= params.p) {
          return ProtocolError(absl::StrCat("share ", i, " from ",
                                            EndpointName(frame.sender),
                                            " outside [0, p)"));
        }
        break;
      case MessageType::kEncodedVector:
        if (e < 1 || e >= params.q) {
          return ProtocolError(absl::StrCat("encoding ", i, " from ",
                                            EndpointName(frame.sender),
                                            " outside [1, q-1]"));
        }
        break;
      default:
        break;
    }
  }
  return absl::OkStatus();
}

}  // namespace kaleido
