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

#include "gkg/error.h"

namespace gkg {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidNodeId: return "InvalidNodeId";
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kDuplicateType: return "DuplicateType";
    case ErrorCode::kUnknownParent: return "UnknownParent";
    case ErrorCode::kCycleWouldForm: return "CycleWouldForm";
    case ErrorCode::kUnknownType: return "UnknownType";
    case ErrorCode::kUnknownNode: return "UnknownNode";
    case ErrorCode::kDuplicateNode: return "DuplicateNode";
    case ErrorCode::kSignatureViolation: return "SignatureViolation";
    case ErrorCode::kInvalidRoleRelation: return "InvalidRoleRelation";
    case ErrorCode::kInvalidLabel: return "InvalidLabel";
    case ErrorCode::kNotAContinuant: return "NotAContinuant";
    case ErrorCode::kAlignmentGraphMismatch: return "AlignmentGraphMismatch";
    case ErrorCode::kEmptyToken: return "EmptyToken";
    case ErrorCode::kSyntaxError: return "SyntaxError";
    case ErrorCode::kMalformedLine: return "MalformedLine";
    case ErrorCode::kDuplicateRule: return "DuplicateRule";
    case ErrorCode::kUnknownRole: return "UnknownRole";
    case ErrorCode::kValidationFailed: return "ValidationFailed";
    case ErrorCode::kIo: return "IoError";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string &message)
    : std::runtime_error(std::string(ErrorCodeName(code)) + ": " + message),
      code_(code) {}

ParseError::ParseError(ErrorCode code, int line, const std::string &message)
    : Error(code, "line " + std::to_string(line) + ": " + message),
      line_(line) {}

}  // namespace gkg
