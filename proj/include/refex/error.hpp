// Copyright 2026 The refex Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef REFEX_ERROR_HPP_
#define REFEX_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace refex {

// Every failure the engine can report. The C API and the CLI exit codes are
// derived from these, so the set is closed and the names are stable.
enum class ErrorCode {
  ParseError = 1,
  DuplicateEntity,
  DuplicateAttribute,
  UnknownEntity,
  ReferentNotInContext,
  NoDistinguishingDescription,
  InstanceTooLarge,
  QualityViolation,
  NotDistinguishing,
  VerificationFailure,
  IoError,
  InvalidArgument,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace refex

#endif  // REFEX_ERROR_HPP_
