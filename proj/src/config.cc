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

#include "kaleido/config.h"

#include <fstream>
#include <sstream>

#include "absl/strings/ascii.h"
#include "absl/strings/numbers.h"
#include "absl/strings/str_cat.h"
#include "absl/strings/str_split.h"
#include "kaleido/status.h"

namespace kaleido {

absl::StatusOr<FileConfig> ParseConfig(std::string_view text,
                                       std::string_view origin) {
  FileConfig config;
  size_t line_no = 0;
  for (absl::string_view raw : absl::StrSplit(AsAbsl(text), '\n')) {
    ++line_no;
    absl::string_view stripped = absl::StripAsciiWhitespace(raw);
    std::string_view line(stripped.data(), stripped.size());
    if (line.empty() || line.front() == '#') continue;
    auto where = [&] { return absl::StrCat(AsAbsl(origin), ":", line_no, ": "); };
    size_t eq = line.find('=');
    if (eq == std::string_view::npos) {
      return ParameterError(absl::StrCat(where(), "expected key = value"));
    }
    std::string key(absl::StripAsciiWhitespace(AsAbsl(line.substr(0, eq))));
    std::string value(absl::StripAsciiWhitespace(AsAbsl(line.substr(eq + 1))));
    auto wrap = [&](const absl::Status& st) {
      return ParameterError(absl::StrCat(where(), key, ": ", st.message()));
    };

    if (key == "p" || key == "q" || key == "prism_generator" ||
        key == "protocol_iv") {
      absl::StatusOr<BigInt> parsed = ParseDecimal(value);
      if (!parsed.ok()) return wrap(parsed.status());
      if (key == "p") {
        config.params.p = *parsed;
      } else if (key == "q") {
        config.params.q = *parsed;
      } else if (key == "prism_generator") {
        config.overrides.prism_generator = *parsed;
      } else {
        absl::StatusOr<ProtocolIv> iv = ProtocolIv::Create(*parsed);
        if (!iv.ok()) return wrap(iv.status());
        config.overrides.protocol_iv = *iv;
      }
    } else if (key == "scheme") {
      absl::StatusOr<Scheme> scheme = ParseScheme(value);
      if (!scheme.ok()) return wrap(scheme.status());
      config.scheme = *scheme;
    } else if (key == "m") {
      int m = 0;
      if (!absl::SimpleAtoi(value, &m) || m < 1) {
        return ParameterError(absl::StrCat(where(), "m must be a positive integer"));
      }
      config.m = m;
    } else if (key == "prf_key_hex") {
      absl::StatusOr<PrfKey> k = PrfKey::FromHex(value);
      if (!k.ok()) return wrap(k.status());
      config.overrides.prf_key = *k;
    } else if (key == "rnd_seed") {
      uint64_t seed = 0;
      if (!absl::SimpleAtoi(value, &seed)) {
        return ParameterError(absl::StrCat(where(), "rnd_seed must fit in 64 bits"));
      }
      config.overrides.rnd_seed = seed;
    } else if (key == "timeout_ms") {
      int64_t ms = 0;
      if (!absl::SimpleAtoi(value, &ms) || ms <= 0) {
        return ParameterError(absl::StrCat(where(), "timeout_ms must be positive"));
      }
      config.timeout = std::chrono::milliseconds(ms);
    } else if (key == "server0_endpoint") {
      config.server0_endpoint = value;
    } else if (key == "server1_endpoint") {
      config.server1_endpoint = value;
    } else if (key == "client_endpoints") {
      config.client_endpoints.clear();
      for (absl::string_view part : absl::StrSplit(value, ',', absl::SkipEmpty())) {
        config.client_endpoints.emplace_back(
            std::string(absl::StripAsciiWhitespace(part)));
      }
    } else {
      return ParameterError(absl::StrCat(where(), "unknown key '", key, "'"));
    }
  }
  return config;
}

absl::StatusOr<FileConfig> LoadConfigFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) return IoError(absl::StrCat("cannot open config file ", path));
  std::stringstream buffer;
  buffer << in.rdbuf();
  return ParseConfig(buffer.str(), path);
}

absl::StatusOr<EndpointAddresses> TcpAddressesFor(const FileConfig& config,
                                                  int m) {
  EndpointAddresses out;
  out[kServer0Endpoint] = config.server0_endpoint.value_or("127.0.0.1:0");
  out[kServer1Endpoint] = config.server1_endpoint.value_or("127.0.0.1:0");
  if (!config.client_endpoints.empty() &&
      static_cast<int>(config.client_endpoints.size()) != m) {
    return ParameterError(absl::StrCat("client_endpoints lists ",
                                       config.client_endpoints.size(),
                                       " addresses for ", m, " clients"));
  }
  for (int c = 0; c < m; ++c) {
    out[static_cast<EndpointId>(c)] = config.client_endpoints.empty()
                                          ? "127.0.0.1:0"
                                          : config.client_endpoints[c];
  }
  return out;
}

}  // namespace kaleido
