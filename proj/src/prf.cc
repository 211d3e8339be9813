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

#include "kaleido/prf.h"

#include <algorithm>
#include <memory>

#include <openssl/evp.h>

#include "absl/strings/escaping.h"
#include "absl/strings/str_cat.h"
#include "kaleido/status.h"

namespace kaleido {
namespace {

struct CipherCtxDeleter {
  void operator()(EVP_CIPHER_CTX* ctx) const { EVP_CIPHER_CTX_free(ctx); }
};

bool IsHexDigit(char c) {
  return (c >= '0' && c <= '9') || (c >= 'a' && c <= 'f') ||
         (c >= 'A' && c <= 'F');
}

const BigInt& Two128() {
  static const BigInt* const value = [] {
    auto* v = new BigInt(1);
    *v <<= 128;
    return v;
  }();
  return *value;
}

}  // namespace

absl::StatusOr<PrfKey> PrfKey::FromBytes(std::span<const uint8_t> bytes) {
  if (bytes.size() != kSize) {
    return ParameterError(
        absl::StrCat("PRF key must be 16 bytes, got ", bytes.size()));
  }
  PrfKey key;
  std::copy(bytes.begin(), bytes.end(), key.bytes_.begin());
  return key;
}

absl::StatusOr<PrfKey> PrfKey::FromHex(std::string_view hex) {
  if (hex.size() != 2 * kSize ||
      !std::all_of(hex.begin(), hex.end(), IsHexDigit)) {
    return ParameterError("PRF key must be 32 hex characters");
  }
  std::string raw = absl::HexStringToBytes(AsAbsl(hex));
  return FromBytes(std::span<const uint8_t>(
      reinterpret_cast<const uint8_t*>(raw.data()), raw.size()));
}

PrfKey PrfKey::Random(RandomSource& random) {
  PrfKey key;
  random.FillBytes(key.bytes_);
  return key;
}

std::string PrfKey::ToHex() const {
  return absl::BytesToHexString(absl::string_view(
      reinterpret_cast<const char*>(bytes_.data()), bytes_.size()));
}

absl::StatusOr<ProtocolIv> ProtocolIv::Create(const BigInt& value) {
  if (sgn(value) < 0 || value >= Two128()) {
    return ParameterError("protocol IV must fit in 128 bits");
  }
  return ProtocolIv(value);
}

absl::StatusOr<std::array<uint8_t, 32>> AesPrf::EvalBytes(
    const BigInt& pos) const {
  if (sgn(pos) < 0 || pos >= Two128()) {
    return ParameterError("PRF position must be in [0, 2^128)");
  }
  BigInt t;
  mpz_xor(t.get_mpz_t(), pos.get_mpz_t(), iv_.value().get_mpz_t());
  KALEIDO_ASSIGN_OR_RETURN(std::vector<uint8_t> block,
                           ToFixedBytesBigEndian(t, 16));

  std::unique_ptr<EVP_CIPHER_CTX, CipherCtxDeleter> ctx(EVP_CIPHER_CTX_new());
  static constexpr uint8_t kZeroIv[16] = {};
  std::array<uint8_t, 32> out{};
  int len = 0;
  int total = 0;
  if (ctx == nullptr ||
      EVP_EncryptInit_ex(ctx.get(), EVP_aes_128_cbc(), nullptr,
                         key_.bytes().data(), kZeroIv) != 1 ||
      EVP_EncryptUpdate(ctx.get(), out.data(), &len, block.data(),
                        static_cast<int>(block.size())) != 1) {
    return absl::InternalError("AES-128-CBC encryption failed");
  }
  total = len;
  if (EVP_EncryptFinal_ex(ctx.get(), out.data() + total, &len) != 1) {
    return absl::InternalError("AES-128-CBC finalization failed");
  }
  total += len;
  if (total != 32) return absl::InternalError("unexpected ciphertext length");
  return out;
}

absl::StatusOr<BigInt> AesPrf::Eval(const BigInt& pos) const {
  KALEIDO_ASSIGN_OR_RETURN(auto bytes, EvalBytes(pos));
  return FromBytesBigEndian(bytes);
}

absl::StatusOr<BigInt> PrfEval(const PrfKey& key, const ProtocolIv& iv,
                               const BigInt& pos) {
  return AesPrf(key, iv).Eval(pos);
}

absl::StatusOr<std::shared_ptr<StubPrf>> StubPrf::Create(
    std::vector<BigInt> sequence) {
  if (sequence.empty()) return ParameterError("stub PRF needs a value");
  for (const BigInt& v : sequence) {
    if (sgn(v) < 0) return ParameterError("stub PRF values must be >= 0");
  }
  return std::shared_ptr<StubPrf>(new StubPrf(std::move(sequence)));
}

absl::StatusOr<BigInt> StubPrf::Eval(const BigInt& pos) const {
  if (sgn(pos) < 0) return ParameterError("position must be >= 0");
  BigInt index = pos % sequence_.size();
  return sequence_[index.get_ui()];
}

}  // namespace kaleido
