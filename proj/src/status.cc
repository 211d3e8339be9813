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

#include "kaleido/status.h"

namespace kaleido {

absl::Status ParameterError(std::string_view message) {
  return absl::InvalidArgumentError(AsAbsl(message));
}

absl::Status GroupError(std::string_view message) {
  return absl::FailedPreconditionError(AsAbsl(message));
}

absl::Status ProtocolError(std::string_view message) {
  return absl::AbortedError(AsAbsl(message));
}

absl::Status FramingError(std::string_view message) {
  return absl::DataLossError(AsAbsl(message));
}

absl::Status TransportError(std::string_view message) {
  return absl::UnavailableError(AsAbsl(message));
}

absl::Status IoError(std::string_view message) {
  return absl::NotFoundError(AsAbsl(message));
}

int ExitCodeFor(const absl::Status& status) {
  switch (status.code()) {
    case absl::StatusCode::kOk:
      return 0;
    case absl::StatusCode::kInvalidArgument:
    case absl::StatusCode::kOutOfRange:
    case absl::StatusCode::kFailedPrecondition:
      return 2;
    case absl::StatusCode::kAborted:
    case absl::StatusCode::kDeadlineExceeded:
    case absl::StatusCode::kDataLoss:
    case absl::StatusCode::kUnavailable:
      return 3;
    case absl::StatusCode::kNotFound:
    case absl::StatusCode::kPermissionDenied:
      return 4;
    default:
      return 1;
  }
}

}  // namespace kaleido
