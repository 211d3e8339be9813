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

#include "kaleido/sharing.h"

#include "absl/strings/str_cat.h"
#include "kaleido/status.h"

namespace kaleido {
namespace {

bool InZp(const BigInt& v, const GroupParams& params) {
  return sgn(v) >= 0 && v < params.p;
}

}  // namespace

BigInt ReduceMod(const BigInt& value, const BigInt& modulus) {
  BigInt out;
  mpz_mod(out.get_mpz_t(), value.get_mpz_t(), modulus.get_mpz_t());
  return out;
}

absl::StatusOr<ScalarShares> SplitScalar(const BigInt& value,
                                         const GroupParams& params,
                                         RandomSource& random) {
  if (!InZp(value, params)) {
    return ParameterError(absl::StrCat("value ", value.get_str(),
                                       " outside [0, ", params.p.get_str(),
                                       ")"));
  }
  ScalarShares out;
  out.share0 = random.UniformBelow(params.p);
  out.share1 = ReduceMod(value - out.share0, params.p);
  return out;
}

absl::StatusOr<std::pair<ShareVector, ShareVector>> SplitVector(
    std::span<const uint8_t> bits, const GroupParams& params,
    RandomSource& random) {
  ShareVector first{.server_index = 0, .elements = {}};
  ShareVector second{.server_index = 1, .elements = {}};
  first.elements.reserve(bits.size());
  second.elements.reserve(bits.size());
  for (size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] > 1) {
      return ParameterError(absl::StrCat("element ", i, " is ",
                                         static_cast<int>(bits[i]),
                                         ", expected 0 or 1"));
    }
    KALEIDO_ASSIGN_OR_RETURN(ScalarShares shares,
                             SplitScalar(BigInt(bits[i]), params, random));
    first.elements.push_back(std::move(shares.share0));
    second.elements.push_back(std::move(shares.share1));
  }
  return std::make_pair(std::move(first), std::move(second));
}

absl::StatusOr<BigInt> Reconstruct(const BigInt& share0, const BigInt& share1,
                                   const GroupParams& params) {
  if (!InZp(share0, params) || !InZp(share1, params)) {
    return ParameterError("share outside [0, p)");
  }
  return ReduceMod(share0 + share1, params.p);
}

}  // namespace kaleido
