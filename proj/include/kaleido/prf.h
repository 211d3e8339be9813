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

#ifndef KALEIDO_PRF_H_
#define KALEIDO_PRF_H_

#include <array>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "absl/status/statusor.h"
#include "kaleido/bigint.h"
#include "kaleido/random.h"

namespace kaleido {

// 16-byte key shared by both servers.
class PrfKey {
 public:
  static constexpr size_t kSize = 16;

  static absl::StatusOr<PrfKey> FromBytes(std::span<const uint8_t> bytes);
  // Exactly 32 hex characters.
  static absl::StatusOr<PrfKey> FromHex(std::string_view hex);
  static PrfKey Random(RandomSource& random);

  const std::array<uint8_t, kSize>& bytes() const { return bytes_; }
  std::string ToHex() const;

  friend bool operator==(const PrfKey&, const PrfKey&) = default;

 private:
  std::array<uint8_t, kSize> bytes_{};
};

// Protocol IV XORed into the position before the PRF call. Fits in 128 bits.
class ProtocolIv {
 public:
  static constexpr uint64_t kDefault = 1234;

  ProtocolIv() : value_(kDefault) {}
  static absl::StatusOr<ProtocolIv> Create(const BigInt& value);

  const BigInt& value() const { return value_; }

 private:
  explicit ProtocolIv(BigInt value) : value_(std::move(value)) {}
  BigInt value_;
};

// Keyed deterministic function of a position.
class Prf {
 public:
  virtual ~Prf() = default;
  virtual absl::StatusOr<BigInt> Eval(const BigInt& pos) const = 0;
};

// AES-128 instantiation: t = pos XOR iv as a 16-byte big-endian block,
// AES-128-CBC with an all-zero chaining IV and PKCS7 padding (so two output
// blocks), and the 32-byte ciphertext read as a big-endian integer.
class AesPrf : public Prf {
 public:
  AesPrf(PrfKey key, ProtocolIv iv) : key_(key), iv_(std::move(iv)) {}

  absl::StatusOr<BigInt> Eval(const BigInt& pos) const override;

  // The raw 32 ciphertext bytes; Eval is this read as an integer.
  absl::StatusOr<std::array<uint8_t, 32>> EvalBytes(const BigInt& pos) const;

 private:
  PrfKey key_;
  ProtocolIv iv_;
};

absl::StatusOr<BigInt> PrfEval(const PrfKey& key, const ProtocolIv& iv,
                               const BigInt& pos);

// Test double that returns seq[pos mod len].
class StubPrf : public Prf {
 public:
  static absl::StatusOr<std::shared_ptr<StubPrf>> Create(
      std::vector<BigInt> sequence);

  absl::StatusOr<BigInt> Eval(const BigInt& pos) const override;

 private:
  explicit StubPrf(std::vector<BigInt> sequence)
      : sequence_(std::move(sequence)) {}
  std::vector<BigInt> sequence_;
};

}  // namespace kaleido

#endif  // KALEIDO_PRF_H_
