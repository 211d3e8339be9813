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

#ifndef KALEIDO_CONFIG_H_
#define KALEIDO_CONFIG_H_

#include <chrono>
#include <optional>
#include <string>
#include <string_view>

#include "absl/status/statusor.h"
#include "kaleido/group.h"
#include "kaleido/oracle.h"
#include "kaleido/transport.h"

namespace kaleido {

// Parsed `key = value` run configuration. Recognized keys:
//
//   p, q                 group orders (decimal)
//   scheme               prism | kaleido-rnd | kaleido-aes
//   m                    expected client count
//   prf_key_hex          32 hex characters
//   protocol_iv          decimal, default 1234
//   prism_generator      decimal, must have order p
//   rnd_seed             decimal, < 2^64
//   timeout_ms           per-actor receive timeout, default 30000
//   server0_endpoint     host:port (TCP backend)
//   server1_endpoint     host:port
//   client_endpoints     comma-separated host:port list, one per client
//
// Blank lines and lines starting with '#' are ignored.
struct FileConfig {
  GroupParams params{BigInt(113), BigInt(227)};
  Scheme scheme = Scheme::kPrism;
  std::optional<int> m;
  RunOverrides overrides;
  std::chrono::milliseconds timeout{30000};
  std::optional<std::string> server0_endpoint;
  std::optional<std::string> server1_endpoint;
  std::vector<std::string> client_endpoints;
};

absl::StatusOr<FileConfig> ParseConfig(std::string_view text,
                                       std::string_view origin = "<config>");
absl::StatusOr<FileConfig> LoadConfigFile(const std::string& path);

// Listen addresses for the TCP backend: configured ones, else 127.0.0.1 with
// an ephemeral port.
absl::StatusOr<EndpointAddresses> TcpAddressesFor(const FileConfig& config,
                                                  int m);

}  // namespace kaleido

#endif  // KALEIDO_CONFIG_H_
