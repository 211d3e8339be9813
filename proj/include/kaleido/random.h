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

#ifndef KALEIDO_RANDOM_H_
#define KALEIDO_RANDOM_H_

#include <cstdint>
#include <deque>
#include <random>
#include <span>
#include <string_view>

#include "kaleido/bigint.h"

namespace kaleido {

// Injected randomness. Every protocol step that samples goes through this
// interface so that tests can force exact values. Implementations are not
// required to be thread-safe; give each actor its own instance.
class RandomSource {
 public:
  virtual ~RandomSource() = default;

  // Uniform draw from [0, bound). `bound` must be positive.
  virtual BigInt UniformBelow(const BigInt& bound) = 0;

  virtual void FillBytes(std::span<uint8_t> out) = 0;

  uint64_t NextUint64();
  bool NextBit();
};

// Backed by the OpenSSL DRBG.
class SecureRandom : public RandomSource {
 public:
  BigInt UniformBelow(const BigInt& bound) override;
  void FillBytes(std::span<uint8_t> out) override;
};

// Reproducible stream for `--seed` runs and statistical tests. Not suitable
// for protecting real data.
class SeededRandom : public RandomSource {
 public:
  explicit SeededRandom(uint64_t seed) : engine_(seed) {}

  BigInt UniformBelow(const BigInt& bound) override;
  void FillBytes(std::span<uint8_t> out) override;

 private:
  std::mt19937_64 engine_;
};

// Replays scripted UniformBelow results (each must be below the requested
// bound), then falls through to `fallback` once the script is exhausted.
// Byte requests always go to the fallback.
class ScriptedRandom : public RandomSource {
 public:
  ScriptedRandom(std::initializer_list<long> values, uint64_t fallback_seed = 0);

  void Push(const BigInt& value) { script_.push_back(value); }
  size_t remaining() const { return script_.size(); }

  BigInt UniformBelow(const BigInt& bound) override;
  void FillBytes(std::span<uint8_t> out) override;

 private:
  std::deque<BigInt> script_;
  SeededRandom fallback_;
};

// Rejection sampling of a uniform value below `bound` from a byte source.
BigInt UniformBelowFromBytes(RandomSource& bytes, const BigInt& bound);

// Derives independent sub-seeds from a master seed; `label` separates
// streams (e.g. one per client).
uint64_t DeriveSeed(uint64_t master, std::string_view label, uint64_t index = 0);

// SplitMix64 finalizer.
uint64_t Mix64(uint64_t x);

}  // namespace kaleido

#endif  // KALEIDO_RANDOM_H_
