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

#ifndef GKG_EVAL_H_
#define GKG_EVAL_H_

#include <array>
#include <cstdint>
#include <string>
#include <string_view>

namespace gkg {

// The Roger Waters birth graph in GKG form, with the name label and the
// birth location as parameters. ESSENTIAL ont:Birth is declared.
std::string WorkedExampleGkg(std::string_view name = "Roger Waters",
                             std::string_view location = "Great Bookham");

// Flat-triple study over random 4-triple suites
//   t1 = (E, r1, L1)  t2 = (E, r2, L1)  t3 = (E, r1, L2)  t4 = (E, r2, L2)
// where r1/r2 are two wordings of one relation and L1/L2 two facts.
struct FlatEvalStats {
  // Pairs in order 1-2, 1-3, 1-4, 2-3, 2-4, 3-4.
  std::array<double, 6> pair_mean{};
  std::array<double, 6> pair_stddev{};
  // Rename band: 1-2 and 3-4. Change-fact band: 1-3 and 2-4.
  double rename_mean = 0.0;
  double rename_stddev = 0.0;
  double fact_mean = 0.0;
  double fact_stddev = 0.0;
  int trials = 0;
};

FlatEvalStats EvaluateFlat(std::uint64_t seed, std::size_t dim, int trials);
std::string FormatFlatEval(const FlatEvalStats &stats);
// EvaluateFlat followed by FormatFlatEval. Throws kInvalidArgument for
// trials < 1.
std::string RunEvalFlat(std::uint64_t seed, std::size_t dim, int trials);

struct GroundedCase {
  std::string name;
  double similarity = 0.0;
  bool match = false;
};

// The worked graph against three mutants: a renamed entity, a changed
// birth location and a translation that only adds French labels and
// relation glosses. Threshold 0.9.
std::array<GroundedCase, 3> EvaluateGrounded(std::uint64_t seed, std::size_t dim);
std::string RunEvalGrounded(std::uint64_t seed, std::size_t dim);

}  // namespace gkg

#endif  // GKG_EVAL_H_
