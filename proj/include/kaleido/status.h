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

#ifndef KALEIDO_STATUS_H_
#define KALEIDO_STATUS_H_

#include <string_view>

#include "absl/status/status.h"
#include "absl/status/statusor.h"

namespace kaleido {

// Error categories used across the toolkit. Each maps onto one absl status
// code so that the CLI can translate a failure into an exit code.
absl::Status ParameterError(std::string_view message);  // kInvalidArgument
absl::Status GroupError(std::string_view message);      // kFailedPrecondition
absl::Status ProtocolError(std::string_view message);   // kAborted
absl::Status FramingError(std::string_view message);    // kDataLoss
absl::Status TransportError(std::string_view message);  // kUnavailable
absl::Status IoError(std::string_view message);         // kNotFound

// absl here predates its std::string_view alias.
inline absl::string_view AsAbsl(std::string_view s) {
  return absl::string_view(s.data(), s.size());
}

// 0 success, 2 parameter error, 3 protocol error, 4 I/O error, 1 otherwise.
int ExitCodeFor(const absl::Status& status);

}  // namespace kaleido

#define KALEIDO_STATUS_CONCAT_INNER_(a, b) a##b
#define KALEIDO_STATUS_CONCAT_(a, b) KALEIDO_STATUS_CONCAT_INNER_(a, b)

#define KALEIDO_RETURN_IF_ERROR(expr)          \
  do {                                         \
    const ::absl::Status _kaleido_st = (expr); \
    if (!_kaleido_st.ok()) return _kaleido_st; \
  } while (0)

#define KALEIDO_ASSIGN_OR_RETURN_IMPL_(tmp, lhs, expr) \
  auto tmp = (expr);                                   \
  if (!tmp.ok()) return tmp.status();                  \
  lhs = std::move(tmp).value()

#define KALEIDO_ASSIGN_OR_RETURN(lhs, expr) \
  KALEIDO_ASSIGN_OR_RETURN_IMPL_(           \
      KALEIDO_STATUS_CONCAT_(_kaleido_sor_, __LINE__), lhs, expr)

#endif  // KALEIDO_STATUS_H_
