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

#include "gkg/text.h"

namespace gkg {
namespace {

bool IsSpace(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' ||
         c == '\v';
}
bool IsUpper(char c) { return c >= 'A' && c <= 'Z'; }
bool IsLower(char c) { return c >= 'a' && c <= 'z'; }

}  // namespace

std::vector<std::string> Tokenize(std::string_view label) {
  std::vector<std::string> tokens;
  std::string current;
  auto flush = [&] {
    if (!current.empty()) tokens.push_back(std::move(current));
    current.clear();
  };
  for (std::size_t i = 0; i < label.size(); ++i) {
    char c = label[i];
    if (c == '_' || c == '-' || IsSpace(c)) {
      flush();
      continue;
    }
    if (IsUpper(c) && i > 0) {
      char prev = label[i - 1];
      bool next_lower = i + 1 < label.size() && IsLower(label[i + 1]);
      // "bornIn" and the "P" in "HTMLParser".
      if (IsLower(prev) || (IsUpper(prev) && next_lower)) flush();
    }
    current += IsUpper(c) ? static_cast<char>(c - 'A' + 'a') : c;
  }
  flush();
  return tokens;
}

std::string TokenKey(std::string_view label) {
  std::string key;
  for (const std::string &t : Tokenize(label)) {
    if (!key.empty()) key += ' ';
    key += t;
  }
  return key;
}

std::uint64_t Fnv1a64(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (char c : bytes) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string Hex64(std::uint64_t value) {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[i] = kDigits[value & 0xf];
    value >>= 4;
  }
  return out;
}

std::vector<std::string_view> SplitFields(std::string_view line,
                                          std::size_t max_fields) {
  std::vector<std::string_view> fields;
  std::size_t i = 0;
  while (true) {
    while (i < line.size() && IsSpace(line[i])) ++i;
    if (i >= line.size()) break;
    if (max_fields != 0 && fields.size() + 1 == max_fields) {
      fields.push_back(line.substr(i));
      break;
    }
    std::size_t start = i;
    while (i < line.size() && !IsSpace(line[i])) ++i;
    fields.push_back(line.substr(start, i - start));
  }
  return fields;
}

std::vector<std::string_view> SplitLines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back(line);
    start = end + 1;
  }
  return lines;
}

bool IsBlankOrComment(std::string_view line) {
  for (char c : line) {
    if (IsSpace(c)) continue;
    return c == '#';
  }
  return true;
}

}  // namespace gkg
