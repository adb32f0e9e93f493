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

#ifndef GKG_TEXT_H_
#define GKG_TEXT_H_

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace gkg {

// Splits a label on camelCase boundaries, underscores, hyphens and
// whitespace, then lowercases ASCII letters. Empty pieces are dropped.
//   "PlaceOfResidence" -> {place, of, residence}
//   "born_in"          -> {born, in}
std::vector<std::string> Tokenize(std::string_view label);

// Tokens joined by single spaces; equal keys mean "same name".
std::string TokenKey(std::string_view label);

// 64-bit FNV-1a.
std::uint64_t Fnv1a64(std::string_view bytes);

// Lowercase, zero-padded, 16 digits.
std::string Hex64(std::uint64_t value);

class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t state) : state_(state) {}

  std::uint64_t Next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Top 53 bits mapped onto [-1, 1).
  double NextSigned() {
    return static_cast<double>(Next() >> 11) * 0x1.0p-52 - 1.0;
  }

 private:
  std::uint64_t state_;
};

// Splits a record line into at most `max_fields` whitespace-separated
// fields; the last field takes the rest of the line verbatim (minus the
// separating whitespace before it). `max_fields == 0` means unlimited.
std::vector<std::string_view> SplitFields(std::string_view line,
                                          std::size_t max_fields = 0);

// Splits text into lines, dropping a trailing '\r' from each.
std::vector<std::string_view> SplitLines(std::string_view text);

bool IsBlankOrComment(std::string_view line);

}  // namespace gkg

#endif  // GKG_TEXT_H_
