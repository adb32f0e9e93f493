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

#include "gkg/labels.h"

#include "gkg/error.h"

namespace gkg {
namespace {

bool IsSpace(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' ||
         c == '\v';
}

void Check(std::string_view lang, std::string_view label) {
  if (!IsValidLanguageCode(lang)) {
    throw Error(ErrorCode::kInvalidLabel,
                "bad language code '" + std::string(lang) + "'");
  }
  if (!IsValidLabel(label)) {
    throw Error(ErrorCode::kInvalidLabel,
                "bad label '" + std::string(label) + "'");
  }
}

}  // namespace

bool IsValidLabel(std::string_view label) {
  if (label.empty() || IsSpace(label.front())) return false;
  return label.find_first_of("\n\r") == std::string_view::npos;
}

bool IsValidLanguageCode(std::string_view lang) {
  if (lang.empty()) return false;
  for (char c : lang) {
    auto u = static_cast<unsigned char>(c);
    if (u <= 0x20 || u >= 0x7f) return false;
  }
  return true;
}

bool LabelTable::Insert(const NodeId &node, std::string_view lang,
                        std::string_view label) {
  Check(lang, label);
  return entries_.try_emplace(Key(node, std::string(lang)), label).second;
}

void LabelTable::Assign(const NodeId &node, std::string_view lang,
                        std::string_view label) {
  Check(lang, label);
  entries_[Key(node, std::string(lang))] = std::string(label);
}

void LabelTable::EraseNode(const NodeId &node) {
  auto it = entries_.lower_bound(Key(node, std::string()));
  while (it != entries_.end() && it->first.first == node) {
    it = entries_.erase(it);
  }
}

std::optional<std::string_view> LabelTable::Get(const NodeId &node,
                                                std::string_view lang) const {
  auto it = entries_.find(Key(node, std::string(lang)));
  if (it == entries_.end()) return std::nullopt;
  return std::string_view(it->second);
}

NodeId RelationGlossId(Relation relation) {
  return NodeId::Parse("rel:" + std::string(RelationName(relation)));
}

}  // namespace gkg
