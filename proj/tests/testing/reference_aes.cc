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

#include "testing/reference_aes.h"

namespace kaleido::testing {
namespace {

uint8_t XTime(uint8_t a) {
  return static_cast<uint8_t>((a << 1) ^ ((a & 0x80) ? 0x1B : 0x00));
}

uint8_t GfMul(uint8_t a, uint8_t b) {
  uint8_t r = 0;
  while (b) {
    if (b & 1) r ^= a;
    a = XTime(a);
    b >>= 1;
  }
  return r;
}

uint8_t GfInverse(uint8_t a) {
  if (a == 0) return 0;
  // a^254 = a^-1 in GF(2^8).
  uint8_t r = 1;
  for (int i = 0; i < 254; ++i) r = GfMul(r, a);
  return r;
}

uint8_t Rotl8(uint8_t x, int s) {
  return static_cast<uint8_t>((x << s) | (x >> (8 - s)));
}

uint8_t SubByte(uint8_t a) {
  uint8_t b = GfInverse(a);
  return b ^ Rotl8(b, 1) ^ Rotl8(b, 2) ^ Rotl8(b, 3) ^ Rotl8(b, 4) ^ 0x63;
}

using State = std::array<std::array<uint8_t, 4>, 4>;  // [row][column]

void AddRoundKey(State& s, const std::array<uint8_t, 176>& w, int round) {
  for (int c = 0; c < 4; ++c) {
    for (int r = 0; r < 4; ++r) s[r][c] ^= w[round * 16 + c * 4 + r];
  }
}

void SubBytes(State& s) {
  for (auto& row : s) {
    for (auto& b : row) b = SubByte(b);
  }
}

void ShiftRows(State& s) {
  for (int r = 1; r < 4; ++r) {
    std::array<uint8_t, 4> t;
    for (int c = 0; c < 4; ++c) t[c] = s[r][(c + r) % 4];
    s[r] = t;
  }
}

void MixColumns(State& s) {
  for (int c = 0; c < 4; ++c) {
    uint8_t a0 = s[0][c], a1 = s[1][c], a2 = s[2][c], a3 = s[3][c];
    s[0][c] = GfMul(a0, 2) ^ GfMul(a1, 3) ^ a2 ^ a3;
    s[1][c] = a0 ^ GfMul(a1, 2) ^ GfMul(a2, 3) ^ a3;
    s[2][c] = a0 ^ a1 ^ GfMul(a2, 2) ^ GfMul(a3, 3);
    s[3][c] = GfMul(a0, 3) ^ a1 ^ a2 ^ GfMul(a3, 2);
  }
}

std::array<uint8_t, 176> ExpandKey(const AesBlock& key) {
  std::array<uint8_t, 176> w{};
  for (int i = 0; i < 16; ++i) w[i] = key[i];
  uint8_t rcon = 1;
  for (int i = 4; i < 44; ++i) {
    uint8_t t[4] = {w[(i - 1) * 4], w[(i - 1) * 4 + 1], w[(i - 1) * 4 + 2],
                    w[(i - 1) * 4 + 3]};
    if (i % 4 == 0) {
      uint8_t first = t[0];
      t[0] = SubByte(t[1]) ^ rcon;
      t[1] = SubByte(t[2]);
      t[2] = SubByte(t[3]);
      t[3] = SubByte(first);
      rcon = XTime(rcon);
    }
    for (int j = 0; j < 4; ++j) w[i * 4 + j] = w[(i - 4) * 4 + j] ^ t[j];
  }
  return w;
}

}  // namespace

AesBlock ReferenceAes128Encrypt(const AesBlock& key, const AesBlock& plaintext) {
  const std::array<uint8_t, 176> w = ExpandKey(key);
  State s;
  for (int c = 0; c < 4; ++c) {
    for (int r = 0; r < 4; ++r) s[r][c] = plaintext[c * 4 + r];
  }
  AddRoundKey(s, w, 0);
  for (int round = 1; round < 10; ++round) {
    SubBytes(s);
    ShiftRows(s);
    MixColumns(s);
    AddRoundKey(s, w, round);
  }
  SubBytes(s);
  ShiftRows(s);
  AddRoundKey(s, w, 10);
  AesBlock out;
  for (int c = 0; c < 4; ++c) {
    for (int r = 0; r < 4; ++r) out[c * 4 + r] = s[r][c];
  }
  return out;
}

std::array<uint8_t, 32> ReferenceCbcPkcs7OneBlock(const AesBlock& key,
                                                   const AesBlock& plaintext) {
  const AesBlock c0 = ReferenceAes128Encrypt(key, plaintext);
  AesBlock pad;
  for (int i = 0; i < 16; ++i) pad[i] = 0x10 ^ c0[i];
  const AesBlock c1 = ReferenceAes128Encrypt(key, pad);
  std::array<uint8_t, 32> out;
  for (int i = 0; i < 16; ++i) {
    out[i] = c0[i];
    out[16 + i] = c1[i];
  }
  return out;
}

}  // namespace kaleido::testing
