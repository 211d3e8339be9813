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

#include "kaleido/bigint.h"

#include <algorithm>

#include "absl/strings/str_cat.h"
#include "kaleido/status.h"

namespace kaleido {

BigInt BigIntFromUint64(uint64_t value) {
  BigInt out;
  mpz_import(out.get_mpz_t(), 1, 1, sizeof(value), 0, 0, &value);
  return out;
}

absl::StatusOr<BigInt> ParseDecimal(std::string_view text) {
  if (text.empty()) return ParameterError("empty integer");
  for (char c : text) {
    if (c < '0' || c > '9') {
      return ParameterError(absl::StrCat("not a decimal integer: '", AsAbsl(text), "'"));
    }
  }
  BigInt out;
  out.set_str(std::string(text), 10);
  return out;
}

std::string ToDecimal(const BigInt& value) { return value.get_str(10); }

std::vector<uint8_t> ToBytesBigEndian(const BigInt& value) {
  if (sgn(value) == 0) return {0x00};
  size_t count = (mpz_sizeinbase(value.get_mpz_t(), 2) + 7) / 8;
  std::vector<uint8_t> out(count);
  size_t written = 0;
  mpz_export(out.data(), &written, 1, 1, 1, 0, value.get_mpz_t());
  out.resize(written);
  return out;
}

absl::StatusOr<std::vector<uint8_t>> ToFixedBytesBigEndian(const BigInt& value,
                                                           size_t width) {
  std::vector<uint8_t> minimal = ToBytesBigEndian(value);
  if (sgn(value) == 0) minimal.clear();
  if (minimal.size() > width) {
    return ParameterError(
        absl::StrCat("value needs ", minimal.size(), " bytes, limit ", width));
  }
  std::vector<uint8_t> out(width - minimal.size(), 0x00);
  out.insert(out.end(), minimal.begin(), minimal.end());
  return out;
}

BigInt FromBytesBigEndian(std::span<const uint8_t> bytes) {
  BigInt out;
  if (!bytes.empty()) {
    mpz_import(out.get_mpz_t(), bytes.size(), 1, 1, 1, 0, bytes.data());
  }
  return out;
}

bool FitsUint64(const BigInt& value) {
  return sgn(value) >= 0 && mpz_sizeinbase(value.get_mpz_t(), 2) <= 64;
}

uint64_t ToUint64(const BigInt& value) {
  uint64_t out = 0;
  size_t count = 0;
  mpz_export(&out, &count, -1, sizeof(out), 0, 0, value.get_mpz_t());
  return count == 0 ? 0 : out;
}

}  // namespace kaleido
