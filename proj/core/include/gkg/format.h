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

#ifndef GKG_FORMAT_H_
#define GKG_FORMAT_H_

#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "gkg/graph.h"
#include "gkg/labels.h"
#include "gkg/schema.h"
#include "gkg/type_hierarchy.h"
#include "gkg/validate.h"

namespace gkg {

// ---------------------------------------------------------------------------
// Flat triples: `e1 TAB r TAB e2` per line. Blank and `#` lines are skipped.
// Throws ParseError(kMalformedLine, line) unless a line has exactly three
// non-empty fields.
std::vector<FlatTriple> ParseFlat(std::string_view text);
std::string SerializeFlat(std::span<const FlatTriple> triples);

// ---------------------------------------------------------------------------
// GKG v1 documents. One record per line, whitespace separated, the last
// field of N/L records runs to end of line:
//
//   T <type> <parent|->
//   N <id> <C|O|A|V> <type> [literal...]
//   E <subject> <relation> <object>
//   L <id> <lang> <label...>
//   ESSENTIAL <eventType>
//   CARD <eventType> <ONE|MANY>
//   ATTRDECL <eventType> <attrType> <FUNCTIONAL|MULTI>
//   ROLE <name> BASE <type> VIA <relation> EVENT <type>
//   SOURCE <id>
//   REVISION <n>
//
// core:Entity is always present. Edge endpoints that name a declared type
// become TypeNode nodes of the graph.
struct GkgDocument {
  TypeHierarchy hierarchy;
  GroundedGraph graph;
  LabelTable labels;
  SchemaDecls decls;

  friend bool operator==(const GkgDocument &, const GkgDocument &) = default;
};

// Throws ParseError(kSyntaxError, line) or ValidationFailed.
GkgDocument ParseGkg(std::string_view text);

// Canonical form: sections T, N, E, L, declarations, each sorted bytewise,
// one '\n' per record.
std::string SerializeGkg(const GkgDocument &doc);

// Problems that are not visible to ValidateGraph: labels on unknown nodes,
// declarations naming unknown types.
ValidationReport ValidateDocument(const GkgDocument &doc);

// ---------------------------------------------------------------------------
// Reification rule files. Besides RULE lines they may carry T, ESSENTIAL,
// CARD, ATTRDECL and ROLE records plus entity typing lines:
//
//   RULE <rel> EVENT <type> SUBJ <role> OBJ ATTR <attrType> <valueType>
//   RULE <rel> EVENT <type> SUBJ <role> OBJ PARTICIPANT <role>
//   ENTITY <type> <label...>
struct RuleFile {
  std::vector<ReificationRule> rules;
  TypeHierarchy hierarchy;
  SchemaDecls decls;
  // Entity label -> instance type; unlisted labels default to core:Entity.
  std::map<std::string, NodeId> entity_types;
};

// Throws ParseError with kSyntaxError, kDuplicateRule or kUnknownRole.
RuleFile ParseRules(std::string_view text);

}  // namespace gkg

#endif  // GKG_FORMAT_H_
