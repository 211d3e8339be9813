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

#include "kaleido/oracle.h"

#include "absl/strings/str_cat.h"
#include "kaleido/sharing.h"
#include "kaleido/status.h"

namespace kaleido {

std::string_view SchemeName(Scheme scheme) {
  switch (scheme) {
    case Scheme::kPrism:
      return "prism";
    case Scheme::kKaleidoRnd:
      return "kaleido-rnd";
    case Scheme::kKaleidoAes:
      return "kaleido-aes";
  }
  return "unknown";
}

absl::StatusOr<Scheme> ParseScheme(std::string_view name) {
  if (name == "prism") return Scheme::kPrism;
  if (name == "kaleido-rnd") return Scheme::kKaleidoRnd;
  if (name == "kaleido-aes") return Scheme::kKaleidoAes;
  return ParameterError(absl::StrCat(
      "unknown scheme '", AsAbsl(name), "' (expected prism, kaleido-rnd, kaleido-aes)"));
}

absl::StatusOr<std::pair<BigInt, BigInt>> SplitClientCount(
    const BigInt& m, const GroupParams& params, RandomSource& random) {
  if (m < 1) return ParameterError("client count m must be >= 1");
  if (params.p < 2) return ParameterError("p must be >= 2");
  BigInt m0 = random.UniformBelow(params.p);
  BigInt m1 = ReduceMod(m - m0, params.p);
  return std::make_pair(std::move(m0), std::move(m1));
}

absl::StatusOr<RunConfig> MakeRunConfig(Scheme scheme, const GroupParams& params,
                                        int m, size_t n, RandomSource& random,
                                        const RunOverrides& overrides) {
  ValidationReport report = ValidateParams(params);
  if (!report.ok) return GroupError(report.failure);
  if (m < 1) return ParameterError("client count m must be >= 1");
  if (BigInt(m) >= params.p) {
    return ParameterError(absl::StrCat(
        "m=", m, " must be below p=", ToDecimal(params.p),
        ": with m >= p, values held by m - p owners alias the intersection"));
  }

  RunConfig config;
  config.params = params;
  config.scheme = scheme;
  config.m = m;
  config.n = n;
  KALEIDO_ASSIGN_OR_RETURN(auto shares,
                           SplitClientCount(BigInt(m), params, random));
  config.m_shares = {std::move(shares.first), std::move(shares.second)};
  if (overrides.protocol_iv.has_value()) {
    config.protocol_iv = *overrides.protocol_iv;
  }

  switch (scheme) {
    case Scheme::kPrism: {
      if (overrides.prism_generator.has_value()) {
        const BigInt& g = *overrides.prism_generator;
        if (!HasOrderP(g, params)) {
          return ParameterError(absl::StrCat(
              "Prism generator ", g.get_str(), " does not have order p=",
              ToDecimal(params.p), " in Z_", ToDecimal(params.q), "^*"));
        }
        config.fixed_generator = g;
      } else {
        BigInt start = random.UniformBelow(params.q - 2) + 2;
        KALEIDO_ASSIGN_OR_RETURN(BigInt g, NextOrderPGenerator(start, params));
        config.fixed_generator = std::move(g);
      }
      break;
    }
    case Scheme::kKaleidoAes:
      config.prf_key = overrides.prf_key.has_value() ? *overrides.prf_key
                                                     : PrfKey::Random(random);
      break;
    case Scheme::kKaleidoRnd:
      config.rnd_seed = overrides.rnd_seed.has_value() ? *overrides.rnd_seed
                                                       : random.NextUint64();
      break;
  }
  return config;
}

ServerConfig ServerProjection(const RunConfig& config, int server_index) {
  ServerConfig out;
  out.index = server_index;
  out.params = config.params;
  out.scheme = config.scheme;
  out.m = config.m;
  out.n = config.n;
  out.m_share = config.m_shares[server_index];
  out.protocol_iv = config.protocol_iv;
  out.prf_key = config.prf_key;
  out.fixed_generator = config.fixed_generator;
  if (server_index == 0) out.rnd_seed = config.rnd_seed;
  return out;
}

ClientConfig ClientProjection(const RunConfig& config, int client_id) {
  return ClientConfig{
      .client_id = client_id, .params = config.params, .n = config.n};
}

}  // namespace kaleido
