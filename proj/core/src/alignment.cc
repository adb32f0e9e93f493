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

#include "gkg/alignment.h"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <limits>

#include "gkg/text.h"

namespace gkg {
namespace {

using RoleIndex = std::map<NodeId, std::vector<std::string>>;

RoleIndex IndexRoles(const GroundedGraph &g, const TypeHierarchy &h,
                     const AlignmentConfig &cfg) {
  RoleIndex index;
  for (RoleLabel &r : InferRoleLabels(g, h, cfg.roles)) {
    index[r.entity].push_back(std::move(r.role));
  }
  return index;
}

EntitySignature Build(const GroundedGraph &g, const TypeHierarchy &h,
                      const LabelTable &labels, const NodeId &id,
                      const AlignmentConfig &cfg, const RoleIndex &roles) {
  const Node &node = g.node(id);
  if (node.kind != NodeKind::kContinuant) {
    throw Error(ErrorCode::kNotAContinuant, id.str());
  }
  const EmbeddingProvider &p = *cfg.provider;
  EntitySignature sig;
  auto put = [&](SlotKey key, const Vector &v) {
    if (!v.IsZero()) sig.slots.insert_or_assign(std::move(key), v.Normalized());
  };

  std::optional<std::string_view> name = labels.Get(id, cfg.pivot_lang);
  put({SlotClass::kName, {}, {}}, EmbedPhrase(p, name ? *name : id.local()));

  if (node.inst_of) {
    Vector types(p.dim());
    for (const NodeId &t : h.Ancestors(*node.inst_of)) {
      types += EmbedPhrase(p, t.local());
    }
    put({SlotClass::kType, {}, {}}, types);
  }

  std::map<SlotKey, Vector> facts;
  for (const Edge &part : g.EdgesTo(id)) {
    if (!IsParticipationRelation(part.relation)) continue;
    const Node &event = g.node(part.subject);
    if (event.kind != NodeKind::kOccurrent || !event.inst_of) continue;
    for (const NodeId &essential : cfg.essential_events) {
      if (!h.Contains(essential) || !h.Contains(*event.inst_of) ||
          !h.IsSubtype(*event.inst_of, essential)) {
        continue;
      }
      for (const Edge &prop : g.EdgesTo(event.id, Relation::kHasProp)) {
        const Node &attr = g.node(prop.subject);
        if (!attr.inst_of) continue;
        SlotKey key{SlotClass::kFact, essential, *attr.inst_of};
        for (const Edge &hv : g.EdgesFrom(attr.id, Relation::kHasValue)) {
          const Node &value = g.node(hv.object);
          if (!value.literal) continue;
          auto [it, unused] = facts.try_emplace(key, p.dim());
          it->second += EmbedPhrase(p, *value.literal);
        }
      }
    }
  }
  for (auto &[key, v] : facts) put(key, v);

  auto it = roles.find(id);
  if (it != roles.end()) {
    Vector sum(p.dim());
    for (const std::string &role : it->second) sum += EmbedPhrase(p, role);
    put({SlotClass::kRoles, {}, {}}, sum);
  }
  return sig;
}

std::string FormatScore(double score) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.4f", score);
  return buf;
}

}  // namespace

std::string SlotKey::ToString() const {
  switch (cls) {
    case SlotClass::kName: return "name";
    case SlotClass::kType: return "type";
    case SlotClass::kRoles: return "roles";
    case SlotClass::kFact:
      return "fact:" + event_type.str() + "/" + attr_type.str();
  }
  return "?";
}

void AlignmentConfig::Check() const {
  if (!provider) throw Error(ErrorCode::kInvalidArgument, "no embedding provider");
  if (!(threshold > 0.0 && threshold <= 1.0)) {
    throw Error(ErrorCode::kInvalidArgument, "threshold must be in (0, 1]");
  }
  if (ambiguity_band < 0.0) {
    throw Error(ErrorCode::kInvalidArgument, "ambiguity band must be >= 0");
  }
  for (const auto &[cls, w] : weights) {
    if (!(w > 0.0)) throw Error(ErrorCode::kInvalidArgument, "weights must be positive");
  }
}

EntitySignature BuildEntitySignature(const GroundedGraph &g,
                                     const TypeHierarchy &h,
                                     const LabelTable &labels, const NodeId &id,
                                     const AlignmentConfig &cfg) {
  cfg.Check();
  return Build(g, h, labels, id, cfg, IndexRoles(g, h, cfg));
}

double SignatureSimilarity(const EntitySignature &a, const EntitySignature &b,
                           const AlignmentConfig &cfg) {
  std::set<SlotKey> keys;
  for (const auto &[k, v] : a.slots) keys.insert(k);
  for (const auto &[k, v] : b.slots) keys.insert(k);
  double total = 0.0;
  double weight_sum = 0.0;
  for (const SlotKey &k : keys) {
    auto w_it = cfg.weights.find(k.cls);
    double w = w_it == cfg.weights.end() ? 1.0 : w_it->second;
    weight_sum += w;
    auto ia = a.slots.find(k);
    auto ib = b.slots.find(k);
    if (ia != a.slots.end() && ib != b.slots.end()) {
      total += w * std::max(0.0, Cosine(ia->second, ib->second));
    }
  }
  return weight_sum > 0.0 ? total / weight_sum : 0.0;
}

AlignmentResult Align(const GroundedGraph &a, const GroundedGraph &b,
                      const TypeHierarchy &h, const LabelTable &labels_a,
                      const LabelTable &labels_b, const AlignmentConfig &cfg) {
  cfg.Check();
  const std::vector<NodeId> ids_a = a.NodesOfKind(NodeKind::kContinuant);
  const std::vector<NodeId> ids_b = b.NodesOfKind(NodeKind::kContinuant);
  const RoleIndex roles_a = IndexRoles(a, h, cfg);
  const RoleIndex roles_b = IndexRoles(b, h, cfg);

  std::vector<EntitySignature> sig_a, sig_b;
  for (const NodeId &id : ids_a) sig_a.push_back(Build(a, h, labels_a, id, cfg, roles_a));
  for (const NodeId &id : ids_b) sig_b.push_back(Build(b, h, labels_b, id, cfg, roles_b));

  auto comparable = [&](const NodeId &x, const NodeId &y) {
    const auto &tx = a.node(x).inst_of;
    const auto &ty = b.node(y).inst_of;
    if (!tx || !ty || !h.Contains(*tx) || !h.Contains(*ty)) return false;
    return h.IsSubtype(*tx, *ty) || h.IsSubtype(*ty, *tx);
  };

  struct Scored {
    std::size_t i, j;
    double score;
  };
  std::vector<std::vector<Scored>> by_a(ids_a.size()), by_b(ids_b.size());
  std::vector<Scored> queue;
  for (std::size_t i = 0; i < ids_a.size(); ++i) {
    for (std::size_t j = 0; j < ids_b.size(); ++j) {
      if (!comparable(ids_a[i], ids_b[j])) continue;
      Scored s{i, j, SignatureSimilarity(sig_a[i], sig_b[j], cfg)};
      by_a[i].push_back(s);
      by_b[j].push_back(s);
      if (s.score >= cfg.threshold) queue.push_back(s);
    }
  }
  std::sort(queue.begin(), queue.end(), [](const Scored &x, const Scored &y) {
    if (x.score != y.score) return x.score > y.score;
    if (x.i != y.i) return x.i < y.i;
    return x.j < y.j;
  });

  std::vector<bool> free_a(ids_a.size(), true), free_b(ids_b.size(), true);
  AlignmentResult result;
  for (const Scored &s : queue) {
    if (!free_a[s.i] || !free_b[s.j]) continue;
    double runner = -std::numeric_limits<double>::infinity();
    for (const Scored &o : by_a[s.i]) {
      if (o.j != s.j && free_b[o.j]) runner = std::max(runner, o.score);
    }
    for (const Scored &o : by_b[s.j]) {
      if (o.i != s.i && free_a[o.i]) runner = std::max(runner, o.score);
    }
    free_a[s.i] = false;
    free_b[s.j] = false;
    if (s.score - runner < cfg.ambiguity_band) {
      Ambiguity amb{ids_a[s.i], {}};
      for (const Scored &o : by_a[s.i]) {
        if ((o.j == s.j || free_b[o.j]) &&
            o.score >= s.score - cfg.ambiguity_band) {
          amb.candidates.push_back({ids_b[o.j], o.score});
        }
      }
      std::sort(amb.candidates.begin(), amb.candidates.end(),
                [](const Candidate &x, const Candidate &y) {
                  if (x.score != y.score) return x.score > y.score;
                  return x.b < y.b;
                });
      result.ambiguous.push_back(std::move(amb));
    } else {
      result.matches.push_back({ids_a[s.i], ids_b[s.j], s.score});
    }
  }
  for (std::size_t i = 0; i < ids_a.size(); ++i) {
    if (free_a[i]) result.unmatched_a.push_back(ids_a[i]);
  }
  for (std::size_t j = 0; j < ids_b.size(); ++j) {
    if (free_b[j]) result.unmatched_b.push_back(ids_b[j]);
  }
  std::sort(result.matches.begin(), result.matches.end());
  std::sort(result.ambiguous.begin(), result.ambiguous.end(),
            [](const Ambiguity &x, const Ambiguity &y) { return x.a < y.a; });
  return result;
}

std::string SerializeAlignment(const AlignmentResult &result) {
  struct Row {
    NodeId a, b;
    double score;
    const char *status;
  };
  std::vector<Row> rows;
  for (const Match &m : result.matches) rows.push_back({m.a, m.b, m.score, "MATCH"});
  for (const Ambiguity &amb : result.ambiguous) {
    for (const Candidate &c : amb.candidates) {
      rows.push_back({amb.a, c.b, c.score, "AMBIG"});
    }
  }
  std::sort(rows.begin(), rows.end(), [](const Row &x, const Row &y) {
    if (x.a != y.a) return x.a < y.a;
    return x.b < y.b;
  });
  std::string out;
  for (const Row &r : rows) {
    out += r.a.str() + "\t" + r.b.str() + "\t" + FormatScore(r.score) + "\t" +
           r.status + "\n";
  }
  return out;
}

std::vector<Match> ParseAlignment(std::string_view tsv) {
  std::vector<Match> out;
  int line_no = 0;
  for (std::string_view line : SplitLines(tsv)) {
    ++line_no;
    if (IsBlankOrComment(line)) continue;
    std::vector<std::string_view> f = SplitFields(line);
    if (f.size() != 4) {
      throw ParseError(ErrorCode::kSyntaxError, line_no,
                       "alignment rows have 4 fields");
    }
    if (f[3] == "AMBIG") continue;
    if (f[3] != "MATCH") {
      throw ParseError(ErrorCode::kSyntaxError, line_no,
                       "status must be MATCH or AMBIG");
    }
    auto a = NodeId::TryParse(f[0]);
    auto b = NodeId::TryParse(f[1]);
    double score = 0.0;
    auto [ptr, ec] = std::from_chars(f[2].data(), f[2].data() + f[2].size(), score);
    if (!a || !b || ec != std::errc() || ptr != f[2].data() + f[2].size()) {
      throw ParseError(ErrorCode::kSyntaxError, line_no, "bad alignment row");
    }
    out.push_back({*a, *b, score});
  }
  return out;
}

std::vector<FlatPairScore> FlatAlign(std::span<const FlatTriple> a,
                                     std::span<const FlatTriple> b,
                                     const EmbeddingProvider &provider) {
  std::vector<Vector> va, vb;
  for (const FlatTriple &t : a) va.push_back(EmbedFlatTriple(provider, t));
  for (const FlatTriple &t : b) vb.push_back(EmbedFlatTriple(provider, t));
  std::vector<FlatPairScore> out;
  for (std::size_t i = 0; i < va.size(); ++i) {
    for (std::size_t j = 0; j < vb.size(); ++j) {
      out.push_back({i, j, Cosine(va[i], vb[j])});
    }
  }
  std::sort(out.begin(), out.end(),
            [](const FlatPairScore &x, const FlatPairScore &y) {
              if (x.cosine != y.cosine) return x.cosine > y.cosine;
              if (x.index_a != y.index_a) return x.index_a < y.index_a;
              return x.index_b < y.index_b;
            });
  return out;
}

}  // namespace gkg
