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

#ifndef GKG_VALIDATE_H_
#define GKG_VALIDATE_H_

#include <compare>
#include <string>
#include <string_view>
#include <vector>

#include "gkg/error.h"
#include "gkg/graph.h"
#include "gkg/type_hierarchy.h"

namespace gkg {

enum class IssueKind {
  kDanglingReference,
  kSignatureViolation,
  kUntypedNode,
  kTypedTypeNode,
  kLiteralOnNonValue,
  kMissingLiteral,
  kInvalidLiteral,
  kUnknownTypeTarget,
  kMultipleTypes,
  kHierarchy,
  kDuplicateRecord,
  kDanglingLabel,
  kUnknownDeclarationType,
};

std::string_view IssueKindName(IssueKind kind);

struct ValidationIssue {
  IssueKind kind;
  std::string subject;
  std::string detail;
  // Source line when the graph came from a file, else 0.
  int line = 0;

  friend auto operator<=>(const ValidationIssue &,
                          const ValidationIssue &) = default;
};

struct ValidationReport {
  std::vector<ValidationIssue> issues;

  bool ok() const { return issues.empty(); }
  std::size_t Count(IssueKind kind) const;

  // Sorts and drops repeats of the same (kind, subject, detail).
  void Normalize();

  // One `kind TAB subject TAB detail TAB line` row per issue.
  std::string ToTsv() const;
};

// Reports dangling references, signature violations, untyped or wrongly
// typed nodes, literal misuse and type references missing from `h`. Never
// throws.
ValidationReport ValidateGraph(const GroundedGraph &g, const TypeHierarchy &h);

class ValidationFailed : public Error {
 public:
  explicit ValidationFailed(ValidationReport report);
  const ValidationReport &report() const { return report_; }

 private:
  ValidationReport report_;
};

}  // namespace gkg

#endif  // GKG_VALIDATE_H_
