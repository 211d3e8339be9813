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

#ifndef KALEIDO_BIGINT_H_
#define KALEIDO_BIGINT_H_

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "absl/status/statusor.h"

namespace kaleido {

// Arbitrary-precision non-negative integers. Desk-scale parameters (113/227)
// and realistic ones go through the same code path.
using BigInt = mpz_class;

BigInt BigIntFromUint64(uint64_t value);

// Parses an unsigned decimal string. Rejects signs, whitespace and empty input.
absl::StatusOr<BigInt> ParseDecimal(std::string_view text);

std::string ToDecimal(const BigInt& value);

// Minimal big-endian magnitude of a non-negative value; zero encodes as a
// single 0x00 byte.
std::vector<uint8_t> ToBytesBigEndian(const BigInt& value);

// Big-endian magnitude left-padded to exactly `width` bytes. The value must
// fit.
absl::StatusOr<std::vector<uint8_t>> ToFixedBytesBigEndian(const BigInt& value,
                                                           size_t width);

BigInt FromBytesBigEndian(std::span<const uint8_t> bytes);

// Fits in an unsigned 64-bit word.
bool FitsUint64(const BigInt& value);
uint64_t ToUint64(const BigInt& value);

}  // namespace kaleido

#endif  // KALEIDO_BIGINT_H_
