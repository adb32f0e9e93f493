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

#include "gkg/eval.h"

#include <cmath>
#include <cstdio>
#include <memory>
#include <vector>

#include "gkg/alignment.h"
#include "gkg/embedding.h"
#include "gkg/error.h"
#include "gkg/format.h"
#include "gkg/text.h"

namespace gkg {
namespace {

constexpr std::array<const char *, 6> kPairNames = {"1-2", "1-3", "1-4",
                                                    "2-3", "2-4", "3-4"};
constexpr std::array<std::pair<int, int>, 6> kPairs = {
    {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};
// Published flat-embedding similarities, in the pair order above. They
// depend on the embedding model used there and are not reproducible here.
constexpr std::array<double, 6> kReference = {0.8853, 0.9298, 0.7989,
                                              0.8219, 0.9204, 0.8849};

// A phrase of `words` random lowercase words of six letters each.
std::string RandomPhrase(SplitMix64 &rng, int words) {
  std::string out;
  for (int w = 0; w < words; ++w) {
    if (w > 0) out += ' ';
    std::uint64_t bits = rng.Next();
    for (int i = 0; i < 6; ++i) {
      out += static_cast<char>('a' + bits % 26);
      bits /= 26;
    }
  }
  return out;
}

struct Moments {
  double sum = 0.0;
  double sum_sq = 0.0;
  int n = 0;

  void Add(double x) {
    sum += x;
    sum_sq += x * x;
    ++n;
  }
  double Mean() const { return n == 0 ? 0.0 : sum / n; }
  // Population standard deviation.
  double Stddev() const {
    if (n == 0) return 0.0;
    double m = Mean();
    return std::sqrt(std::max(0.0, sum_sq / n - m * m));
  }
};

std::string Fixed(double x, int digits = 4) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.*f", digits, x);
  return buf;
}

}  // namespace

std::string WorkedExampleGkg(std::string_view name, std::string_view location) {
  std::string out =
      "T core:Human core:Entity\n"
      "T ont:Birth core:Entity\n"
      "T ont:Time core:Entity\n"
      "T ont:Location core:Entity\n"
      "T ont:Date core:Entity\n"
      "T ont:Village core:Entity\n"
      "N ex:rw C core:Human\n"
      "N ex:birth1 O ont:Birth\n"
      "N ex:t1 A ont:Time\n"
      "N ex:l1 A ont:Location\n"
      "N ex:v1 V ont:Date 01/08/1955\n";
  out += "N ex:v2 V ont:Village " + std::string(location) + "\n";
  out +=
      "E ex:birth1 participantIn ex:rw\n"
      "E ex:t1 hasProp ex:birth1\n"
      "E ex:t1 hasValue ex:v1\n"
      "E ex:l1 hasProp ex:birth1\n"
      "E ex:l1 hasValue ex:v2\n";
  out += "L ex:rw en " + std::string(name) + "\n";
  out += "ESSENTIAL ont:Birth\n";
  return out;
}

FlatEvalStats EvaluateFlat(std::uint64_t seed, std::size_t dim, int trials) {
  if (trials < 1) throw Error(ErrorCode::kInvalidArgument, "trials must be >= 1");
  HashEmbeddingProvider provider(seed, dim);
  SplitMix64 rng(seed);
  std::array<Moments, 6> pairs;
  Moments rename, fact;
  for (int t = 0; t < trials; ++t) {
    std::string entity = RandomPhrase(rng, 2);
    std::string r1 = RandomPhrase(rng, 2);
    std::string r2 = RandomPhrase(rng, 3);
    std::string l1 = RandomPhrase(rng, 1);
    std::string l2 = RandomPhrase(rng, 1);
    std::array<Vector, 4> v = {
        EmbedFlatTriple(provider, {entity, r1, l1}),
        EmbedFlatTriple(provider, {entity, r2, l1}),
        EmbedFlatTriple(provider, {entity, r1, l2}),
        EmbedFlatTriple(provider, {entity, r2, l2})};
    for (std::size_t p = 0; p < kPairs.size(); ++p) {
      double c = Cosine(v[kPairs[p].first], v[kPairs[p].second]);
      pairs[p].Add(c);
      if (p == 0 || p == 5) rename.Add(c);
      if (p == 1 || p == 4) fact.Add(c);
    }
  }
  FlatEvalStats stats;
  stats.trials = trials;
  for (std::size_t p = 0; p < pairs.size(); ++p) {
    stats.pair_mean[p] = pairs[p].Mean();
    stats.pair_stddev[p] = pairs[p].Stddev();
  }
  stats.rename_mean = rename.Mean();
  stats.rename_stddev = rename.Stddev();
  stats.fact_mean = fact.Mean();
  stats.fact_stddev = fact.Stddev();
  return stats;
}

std::string FormatFlatEval(const FlatEvalStats &stats) {
  std::string out = "pair\tmean\tstddev\n";
  for (std::size_t p = 0; p < kPairNames.size(); ++p) {
    out += std::string(kPairNames[p]) + "\t" + Fixed(stats.pair_mean[p]) +
           "\t" + Fixed(stats.pair_stddev[p]) + "\n";
  }
  out += "band\trename_relation\t" + Fixed(stats.rename_mean) + "\t" +
         Fixed(stats.rename_stddev) + "\n";
  out += "band\tchange_fact\t" + Fixed(stats.fact_mean) + "\t" +
         Fixed(stats.fact_stddev) + "\n";
  out += "delta\t" + Fixed(std::fabs(stats.rename_mean - stats.fact_mean)) + "\n";
  out += "trials\t" + std::to_string(stats.trials) + "\n";
  out += "# published reference values (model-specific, not "
         "reproducible):";
  for (double r : kReference) out += " " + Fixed(r);
  out += "\n";
  return out;
}

std::string RunEvalFlat(std::uint64_t seed, std::size_t dim, int trials) {
  return FormatFlatEval(EvaluateFlat(seed, dim, trials));
}

std::array<GroundedCase, 3> EvaluateGrounded(std::uint64_t seed,
                                             std::size_t dim) {
  GkgDocument base = ParseGkg(WorkedExampleGkg());
  GkgDocument renamed = ParseGkg(WorkedExampleGkg("George Roger Waters"));
  GkgDocument moved = ParseGkg(WorkedExampleGkg("Roger Waters", "Chelsea"));
  GkgDocument glossed = base;
  const NodeId rw = NodeId::Parse("ex:rw");
  glossed.labels.Assign(rw, "fr", "Roger Waters");
  glossed.labels.Assign(NodeId::Parse("ex:birth1"), "fr", "naissance");
  glossed.labels.Assign(RelationGlossId(Relation::kParticipantIn), "fr",
                        "participe à");
  glossed.labels.Assign(RelationGlossId(Relation::kHasProp), "fr",
                        "a la propriété");
  glossed.labels.Assign(RelationGlossId(Relation::kHasValue), "fr",
                        "a la valeur");

  AlignmentConfig cfg;
  cfg.provider = std::make_shared<HashEmbeddingProvider>(seed, dim);
  cfg.essential_events = base.decls.essential;
  EntitySignature sig =
      BuildEntitySignature(base.graph, base.hierarchy, base.labels, rw, cfg);

  std::array<std::pair<const char *, const GkgDocument *>, 3> mutants = {
      {{"renamed_entity", &renamed},
       {"changed_location", &moved},
       {"gloss_only", &glossed}}};
  std::array<GroundedCase, 3> out;
  for (std::size_t i = 0; i < mutants.size(); ++i) {
    const GkgDocument &m = *mutants[i].second;
    AlignmentResult r = Align(base.graph, m.graph, base.hierarchy, base.labels,
                              m.labels, cfg);
    EntitySignature other =
        BuildEntitySignature(m.graph, m.hierarchy, m.labels, rw, cfg);
    out[i].name = mutants[i].first;
    out[i].similarity = SignatureSimilarity(sig, other, cfg);
    out[i].match = !r.matches.empty();
  }
  return out;
}

std::string RunEvalGrounded(std::uint64_t seed, std::size_t dim) {
  std::string out = "mutant\tsimilarity\tstatus\n";
  for (const GroundedCase &c : EvaluateGrounded(seed, dim)) {
    out += c.name + "\t" + Fixed(c.similarity) + "\t" +
           (c.match ? "MATCH" : "NO_MATCH") + "\n";
  }
  out += "threshold\t0.9000\n";
  return out;
}

}  // namespace gkg
