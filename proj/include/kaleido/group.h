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

#ifndef KALEIDO_GROUP_H_
#define KALEIDO_GROUP_H_

#include <string>
#include <vector>

#include "absl/status/statusor.h"
#include "kaleido/bigint.h"

namespace kaleido {

// The additive group (Z_p, +) that carries secret shares and the
// multiplicative group (Z_q^*, x) that carries encodings. Valid parameters
// have p, q prime and p | q - 1, so that Z_q^* contains a subgroup of order p.
struct GroupParams {
  BigInt p;
  BigInt q;

  friend bool operator==(const GroupParams&, const GroupParams&) = default;
};

struct ValidationReport {
  bool ok = true;
  // First violated condition; empty when ok.
  std::string failure;
};

// base^exponent mod modulus by square-and-multiply.
absl::StatusOr<BigInt> ModExp(const BigInt& base, const BigInt& exponent,
                              const BigInt& modulus);

// Smallest k >= 1 with g^k = 1 (mod q). Works by stripping prime factors of
// q - 1 from the candidate order.
absl::StatusOr<BigInt> ElementOrder(const BigInt& g, const GroupParams& params);

// True iff g has order exactly p in Z_q^*. Since p is prime this reduces to
// g != 1 and g^p = 1.
bool HasOrderP(const BigInt& g, const GroupParams& params);

// One step of the generator scan: ((g + 1) mod (q - 2)) + 2. Note that the
// step is +3 away from the wrap point, and q - 1 wraps to 4.
BigInt AdvanceGeneratorCandidate(const BigInt& g, const BigInt& q);

// First element of order p reached from `start` by repeated
// AdvanceGeneratorCandidate, including `start` itself. Gives up after q - 2
// candidates.
absl::StatusOr<BigInt> NextOrderPGenerator(const BigInt& start,
                                           const GroupParams& params);

ValidationReport ValidateParams(const GroupParams& params);

// Trial division below 2^20; 64-round Miller-Rabin above.
bool IsPrime(const BigInt& n);

// Prime factorization (with multiplicity collapsed) of n >= 1.
std::vector<BigInt> DistinctPrimeFactors(const BigInt& n);

}  // namespace kaleido

#endif  // KALEIDO_GROUP_H_
