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

#include "kaleido/random.h"

#include <cassert>
#include <cstdlib>
#include <vector>

#include <openssl/rand.h>

namespace kaleido {

uint64_t RandomSource::NextUint64() {
  uint8_t bytes[8];
  FillBytes(bytes);
  uint64_t out = 0;
  for (uint8_t b : bytes) out = (out << 8) | b;
  return out;
}

bool RandomSource::NextBit() {
  uint8_t byte;
  FillBytes(std::span<uint8_t>(&byte, 1));
  return (byte & 1) != 0;
}

BigInt UniformBelowFromBytes(RandomSource& source, const BigInt& bound) {
  assert(sgn(bound) > 0);
  if (bound == 1) return 0;
  BigInt max = bound - 1;
  size_t bits = mpz_sizeinbase(max.get_mpz_t(), 2);
  size_t nbytes = (bits + 7) / 8;
  unsigned top_mask = 0xFFu >> (8 * nbytes - bits);
  std::vector<uint8_t> buf(nbytes);
  while (true) {
    source.FillBytes(buf);
    buf[0] &= static_cast<uint8_t>(top_mask);
    BigInt candidate = FromBytesBigEndian(buf);
    if (candidate < bound) return candidate;
  }
}

BigInt SecureRandom::UniformBelow(const BigInt& bound) {
  return UniformBelowFromBytes(*this, bound);
}

void SecureRandom::FillBytes(std::span<uint8_t> out) {
  if (out.empty()) return;
  if (RAND_bytes(out.data(), static_cast<int>(out.size())) != 1) {
    // The DRBG only fails when the system entropy source is unavailable.
    std::abort();
  }
}

BigInt SeededRandom::UniformBelow(const BigInt& bound) {
  return UniformBelowFromBytes(*this, bound);
}

void SeededRandom::FillBytes(std::span<uint8_t> out) {
  size_t i = 0;
  while (i < out.size()) {
    uint64_t word = engine_();
    for (int k = 0; k < 8 && i < out.size(); ++k, ++i) {
      out[i] = static_cast<uint8_t>(word >> (8 * k));
    }
  }
}

ScriptedRandom::ScriptedRandom(std::initializer_list<long> values,
                               uint64_t fallback_seed)
    : fallback_(fallback_seed) {
  for (long v : values) script_.emplace_back(v);
}

BigInt ScriptedRandom::UniformBelow(const BigInt& bound) {
  if (script_.empty()) return fallback_.UniformBelow(bound);
  BigInt value = script_.front();
  script_.pop_front();
  // A script that violates the requested range is a broken test fixture.
  if (value < 0 || value >= bound) std::abort();
  return value;
}

void ScriptedRandom::FillBytes(std::span<uint8_t> out) {
  fallback_.FillBytes(out);
}

uint64_t Mix64(uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

uint64_t DeriveSeed(uint64_t master, std::string_view label, uint64_t index) {
  // FNV-1a over the label, then mixed with the master seed and index.
  uint64_t h = 0xCBF29CE484222325ull;
  for (char c : label) {
    h ^= static_cast<uint8_t>(c);
    h *= 0x100000001B3ull;
  }
  return Mix64(Mix64(master ^ h) + index);
}

}  // namespace kaleido
