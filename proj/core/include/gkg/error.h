// Copyright 2026 The GKG Authors.
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

#ifndef GKG_ERROR_H_
#define GKG_ERROR_H_

#include <stdexcept>
#include <string>
#include <string_view>

namespace gkg {

enum class ErrorCode {
  kInvalidNodeId,
  kInvalidArgument,
  kDuplicateType,
  kUnknownParent,
  kCycleWouldForm,
  kUnknownType,
  kUnknownNode,
  kDuplicateNode,
  kSignatureViolation,
  kInvalidRoleRelation,
  kInvalidLabel,
  kNotAContinuant,
  kAlignmentGraphMismatch,
  kEmptyToken,
  kSyntaxError,
  kMalformedLine,
  kDuplicateRule,
  kUnknownRole,
  kValidationFailed,
  kIo,
};

std::string_view ErrorCodeName(ErrorCode code);

// Base exception for every failure raised by the toolkit.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string &message);

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

// An error tied to a 1-based line of some text input.
class ParseError : public Error {
 public:
  ParseError(ErrorCode code, int line, const std::string &message);

  int line() const { return line_; }

 private:
  int line_;
};

}  // namespace gkg

#endif  // GKG_ERROR_H_
