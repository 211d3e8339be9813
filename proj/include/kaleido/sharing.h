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

#ifndef KALEIDO_SHARING_H_
#define KALEIDO_SHARING_H_

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "absl/status/statusor.h"
#include "kaleido/bigint.h"
#include "kaleido/group.h"
#include "kaleido/random.h"

namespace kaleido {

// Presence flags over the attribute domain; every entry is 0 or 1.
using BitVector = std::vector<uint8_t>;

// One server's additive shares over Z_p, either a single client's V_i^b or
// the aggregate V^b. Elements are always reduced into [0, p).
struct ShareVector {
  int server_index = 0;
  std::vector<BigInt> elements;

  size_t size() const { return elements.size(); }
  friend bool operator==(const ShareVector&, const ShareVector&) = default;
};

struct ScalarShares {
  BigInt share0;
  BigInt share1;
};

// share0 is drawn uniformly from [0, p); share1 = (v - share0) mod p.
absl::StatusOr<ScalarShares> SplitScalar(const BigInt& value,
                                         const GroupParams& params,
                                         RandomSource& random);

// Element-wise SplitScalar. Returns the shares for server 0 and server 1.
absl::StatusOr<std::pair<ShareVector, ShareVector>> SplitVector(
    std::span<const uint8_t> bits, const GroupParams& params,
    RandomSource& random);

absl::StatusOr<BigInt> Reconstruct(const BigInt& share0, const BigInt& share1,
                                   const GroupParams& params);

// Reduces any integer into [0, modulus).
BigInt ReduceMod(const BigInt& value, const BigInt& modulus);

}  // namespace kaleido

#endif  // KALEIDO_SHARING_H_
