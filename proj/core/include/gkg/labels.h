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

#ifndef GKG_LABELS_H_
#define GKG_LABELS_H_

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>

#include "gkg/node_id.h"
#include "gkg/vocabulary.h"

namespace gkg {

// Per-language labels keyed by (node, BCP-47 language code). Language codes
// are opaque. At most one label per key.
class LabelTable {
 public:
  using Key = std::pair<NodeId, std::string>;

  // Returns false and leaves the table unchanged when the key is already
  // bound. Throws kInvalidLabel for empty/multi-line labels or bad codes.
  bool Insert(const NodeId &node, std::string_view lang,
              std::string_view label);
  // Inserts or replaces.
  void Assign(const NodeId &node, std::string_view lang,
              std::string_view label);

  // Drops every label of `node`.
  void EraseNode(const NodeId &node);

  std::optional<std::string_view> Get(const NodeId &node,
                                      std::string_view lang) const;

  const std::map<Key, std::string> &entries() const { return entries_; }
  bool empty() const { return entries_.empty(); }
  std::size_t size() const { return entries_.size(); }

  friend bool operator==(const LabelTable &, const LabelTable &) = default;

 private:
  std::map<Key, std::string> entries_;
};

// A label must be non-empty, single-line and must not start with
// whitespace, so that it survives the last-field-greedy record formats.
bool IsValidLabel(std::string_view label);
bool IsValidLanguageCode(std::string_view lang);

// Pseudo-node carrying a relation's localized glosses, e.g. `rel:isA`.
NodeId RelationGlossId(Relation relation);

}  // namespace gkg

#endif  // GKG_LABELS_H_
