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

#ifndef KALEIDO_TESTING_REFERENCE_AES_H_
#define KALEIDO_TESTING_REFERENCE_AES_H_

#include <array>
#include <cstdint>

namespace kaleido::testing {

using AesBlock = std::array<uint8_t, 16>;

// Straight transcription of FIPS-197 AES-128 encryption. Slow, table-free,
// and independent of OpenSSL so it can cross-check the production PRF.
AesBlock ReferenceAes128Encrypt(const AesBlock& key, const AesBlock& plaintext);

// CBC with an all-zero IV over one full block plus its PKCS7 padding block.
std::array<uint8_t, 32> ReferenceCbcPkcs7OneBlock(const AesBlock& key,
                                                   const AesBlock& plaintext);

}  // namespace kaleido::testing

#endif  // KALEIDO_TESTING_REFERENCE_AES_H_
