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

#include "refex/error.hpp"

namespace refex {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::ParseError:
      return "ParseError";
    case ErrorCode::DuplicateEntity:
      return "DuplicateEntity";
    case ErrorCode::DuplicateAttribute:
      return "DuplicateAttribute";
    case ErrorCode::UnknownEntity:
      return "UnknownEntity";
    case ErrorCode::ReferentNotInContext:
      return "ReferentNotInContext";
    case ErrorCode::NoDistinguishingDescription:
      return "NoDistinguishingDescription";
    case ErrorCode::InstanceTooLarge:
      return "InstanceTooLarge";
    case ErrorCode::QualityViolation:
      return "QualityViolation";
    case ErrorCode::NotDistinguishing:
      return "NotDistinguishing";
    case ErrorCode::VerificationFailure:
      return "VerificationFailure";
    case ErrorCode::IoError:
      return "IoError";
    case ErrorCode::InvalidArgument:
      return "InvalidArgument";
  }
  return "Unknown";
}

}  // namespace refex
