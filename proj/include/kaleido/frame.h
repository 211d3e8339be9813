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

#ifndef KALEIDO_FRAME_H_
#define KALEIDO_FRAME_H_

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "absl/status/statusor.h"
#include "kaleido/bigint.h"
#include "kaleido/group.h"

namespace kaleido {

// Wire layout (all integers big-endian):
//
//   offset  size  field
//   0       4     magic "KPSI" (4B 50 53 49)
//   4       1     version (0x01)
//   5       1     message type
//   6       2     sender id
//   8       4     element count
//   12      ...   per element: 2-byte length, then that many magnitude bytes
//
// Magnitudes are minimal; zero is a single 0x00 byte.

enum class MessageType : uint8_t {
  kShareVector = 0x01,
  kEncodedVector = 0x02,
  kRndSeed = 0x03,
  kControl = 0x04,
};

using EndpointId = uint16_t;

inline constexpr EndpointId kServer0Endpoint = 0xFFF0;
inline constexpr EndpointId kServer1Endpoint = 0xFFF1;
inline constexpr EndpointId kOracleEndpoint = 0xFFFE;
inline constexpr EndpointId kMaxClientEndpoint = 0xFFEF;

inline constexpr std::array<uint8_t, 4> kFrameMagic = {0x4B, 0x50, 0x53, 0x49};
inline constexpr uint8_t kFrameVersion = 0x01;
inline constexpr size_t kFrameHeaderSize = 12;

EndpointId ServerEndpoint(int server_index);
bool IsServerEndpoint(EndpointId id);
bool IsClientEndpoint(EndpointId id);
std::string EndpointName(EndpointId id);

struct Frame {
  MessageType type = MessageType::kControl;
  EndpointId sender = 0;
  std::vector<BigInt> elements;

  friend bool operator==(const Frame&, const Frame&) = default;
};

// Fails on negative elements or magnitudes longer than 65535 bytes.
absl::StatusOr<std::vector<uint8_t>> EncodeFrame(const Frame& frame);

// Rejects bad magic, unknown version or type, truncation, trailing bytes and
// non-minimal magnitudes. Errors carry the byte offset.
absl::StatusOr<Frame> DecodeFrame(std::span<const uint8_t> bytes);

struct FrameHeader {
  MessageType type;
  EndpointId sender;
  uint32_t element_count;
};

absl::StatusOr<FrameHeader> DecodeFrameHeader(std::span<const uint8_t> bytes);

// Range check for the payload: shares in [0, p), encodings in [1, q-1].
absl::Status ValidateFrameElements(const Frame& frame, const GroupParams& params);

}  // namespace kaleido

#endif  // KALEIDO_FRAME_H_
