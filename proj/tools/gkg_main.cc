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

// Command-line front end. Machine-readable output goes to stdout (or -o),
// diagnostics to stderr. Exit codes: 0 ok, 1 validation or domain failure,
// 2 parse error or bad usage, 3 I/O error.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "gkg/alignment.h"
#include "gkg/canonicalizer.h"
#include "gkg/embedding.h"
#include "gkg/error.h"
#include "gkg/eval.h"
#include "gkg/format.h"
#include "gkg/merge.h"
#include "gkg/multilingual.h"
#include "gkg/type_hierarchy.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitDomain = 1;
constexpr int kExitParse = 2;
constexpr int kExitIo = 3;

std::string ReadFile(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw gkg::Error(gkg::ErrorCode::kIo, "cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void WriteOutput(const std::string &path, const std::string &text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text)) {
    throw gkg::Error(gkg::ErrorCode::kIo, "cannot write " + path);
  }
}

gkg::GkgDocument LoadDocument(const std::string &path) {
  try {
    return gkg::ParseGkg(ReadFile(path));
  } catch (const gkg::ParseError &) {
    std::cerr << path << ": ";
    throw;
  }
}

struct ProviderFlags {
  std::string kind = "hash";
  std::string vectors;
  std::uint64_t seed = 42;
  std::size_t dim = 64;

  void Register(CLI::App *app) {
    app->add_option("--provider", kind, "Embedding provider")
        ->check(CLI::IsMember({"hash", "file"}));
    app->add_option("--vectors", vectors, "Word-vector file for --provider file");
    app->add_option("--seed", seed, "Hash seed (also the file fallback seed)");
    app->add_option("--dim", dim, "Embedding dimension")
        ->check(CLI::PositiveNumber);
  }

  std::shared_ptr<const gkg::EmbeddingProvider> Make() const {
    if (kind == "file") {
      if (vectors.empty()) {
        throw gkg::Error(gkg::ErrorCode::kInvalidArgument,
                         "--provider file needs --vectors");
      }
      return gkg::FileEmbeddingProvider::Load(vectors, seed);
    }
    return std::make_shared<gkg::HashEmbeddingProvider>(seed, dim);
  }
};

int Validate(const std::string &path) {
  try {
    LoadDocument(path);
  } catch (const gkg::ValidationFailed &e) {
    std::cout << e.report().ToTsv();
    std::cerr << path << ": " << e.report().issues.size()
              << " validation issue(s)\n";
    return kExitDomain;
  }
  return kExitOk;
}

int Canonicalize(const std::string &rules_path, const std::string &flat_path,
                 const std::string &out, const std::string &report_path) {
  gkg::RuleFile rules;
  try {
    rules = gkg::ParseRules(ReadFile(rules_path));
  } catch (const gkg::ParseError &) {
    std::cerr << rules_path << ": ";
    throw;
  }
  std::vector<gkg::FlatTriple> triples;
  try {
    triples = gkg::ParseFlat(ReadFile(flat_path));
  } catch (const gkg::ParseError &) {
    std::cerr << flat_path << ": ";
    throw;
  }
  gkg::CanonResult result = gkg::Canonicalize(triples, rules);
  gkg::GkgDocument doc = gkg::ToDocument(result, rules);
  gkg::ValidationReport report = gkg::ValidateDocument(doc);
  WriteOutput(out, gkg::SerializeGkg(doc));
  if (report_path.empty()) {
    std::cerr << result.report.ToText();
  } else {
    WriteOutput(report_path, result.report.ToText());
  }
  if (!report.ok()) {
    std::cerr << report.ToTsv();
    return kExitDomain;
  }
  return kExitOk;
}

int Align(const std::string &path_a, const std::string &path_b,
          const ProviderFlags &provider, double threshold,
          const std::string &pivot, const std::string &out) {
  gkg::GkgDocument a = LoadDocument(path_a);
  gkg::GkgDocument b = LoadDocument(path_b);
  gkg::TypeHierarchy h = gkg::TypeHierarchy::Union(a.hierarchy, b.hierarchy);
  gkg::SchemaDecls decls = gkg::SchemaDecls::Union(a.decls, b.decls);
  gkg::AlignmentConfig cfg;
  cfg.provider = provider.Make();
  cfg.threshold = threshold;
  cfg.pivot_lang = pivot;
  cfg.essential_events = decls.essential;
  cfg.roles.assign(decls.roles.begin(), decls.roles.end());
  cfg.Check();
  gkg::AlignmentResult result =
      gkg::Align(a.graph, b.graph, h, a.labels, b.labels, cfg);
  WriteOutput(out, gkg::SerializeAlignment(result));
  std::cerr << "matches " << result.matches.size() << ", ambiguous "
            << result.ambiguous.size() << ", unmatched " << result.unmatched_a.size()
            << "/" << result.unmatched_b.size() << "\n";
  return kExitOk;
}

int Merge(const std::string &path_a, const std::string &path_b,
          const std::string &alignment_path, bool keep_both,
          const std::string &out, const std::string &report_path) {
  gkg::GkgDocument a = LoadDocument(path_a);
  gkg::GkgDocument b = LoadDocument(path_b);
  std::vector<gkg::Match> alignment =
      gkg::ParseAlignment(ReadFile(alignment_path));
  gkg::GkgDocument merged;
  merged.hierarchy = gkg::TypeHierarchy::Union(a.hierarchy, b.hierarchy);
  merged.decls = gkg::SchemaDecls::Union(a.decls, b.decls);
  gkg::MergePolicy policy = gkg::MergePolicy::FromDecls(merged.decls);
  policy.prefer_newer = !keep_both;
  gkg::MergeResult result = gkg::Merge(a.graph, a.labels, b.graph, b.labels,
                                       alignment, policy, merged.hierarchy);
  merged.graph = std::move(result.graph);
  merged.labels = std::move(result.labels);
  WriteOutput(out, gkg::SerializeGkg(merged));
  if (report_path.empty()) {
    std::cerr << result.report.ToTsv();
  } else {
    WriteOutput(report_path, result.report.ToTsv());
  }
  return kExitOk;
}

int Render(const std::string &path, const std::string &lang,
           const std::string &out) {
  gkg::GkgDocument doc = LoadDocument(path);
  WriteOutput(out, gkg::SerializeView(gkg::Render(doc.graph, doc.labels, lang)));
  return kExitOk;
}

int IsoCheck(const std::string &path_a, const std::string &path_b,
             const std::string &lang_a, const std::string &lang_b) {
  gkg::GkgDocument a = LoadDocument(path_a);
  gkg::GkgDocument b = LoadDocument(path_b);
  gkg::IsoCheck check =
      gkg::CheckIsomorphic(gkg::Render(a.graph, a.labels, lang_a),
                           gkg::Render(b.graph, b.labels, lang_b));
  if (check.isomorphic) {
    std::cout << "ISOMORPHIC\n";
    return kExitOk;
  }
  std::cout << "NOT_ISOMORPHIC\t" << check.witness << "\n";
  return kExitDomain;
}

}  // namespace

int main(int argc, char **argv) {
  CLI::App app{"Grounded knowledge graph toolkit"};
  app.require_subcommand(1);
  int status = kExitOk;

  std::string out, report_path;

  auto *validate = app.add_subcommand("validate", "Parse and validate a .gkg file");
  std::string validate_path;
  validate->add_option("graph", validate_path)->required();
  validate->callback([&] { status = Validate(validate_path); });

  auto *canon = app.add_subcommand("canonicalize", "Reify flat triples");
  std::string rules_path, flat_path;
  canon->add_option("--rules", rules_path, "Rule file")->required();
  canon->add_option("--flat", flat_path, "Flat triple TSV")->required();
  canon->add_option("-o", out, "Output .gkg (default stdout)");
  canon->add_option("--report", report_path, "Report file (default stderr)");
  canon->callback(
      [&] { status = Canonicalize(rules_path, flat_path, out, report_path); });

  auto *align = app.add_subcommand("align", "Align the entities of two graphs");
  std::string align_a, align_b, pivot = "en";
  double threshold = 0.9;
  ProviderFlags provider;
  provider.Register(align);
  align->add_option("--threshold", threshold, "Match threshold")
      ->check(CLI::Range(0.0, 1.0));
  align->add_option("--pivot-lang", pivot, "Language of the name slot");
  align->add_option("a", align_a)->required();
  align->add_option("b", align_b)->required();
  align->add_option("-o", out, "Output TSV (default stdout)");
  align->callback([&] {
    status = Align(align_a, align_b, provider, threshold, pivot, out);
  });

  auto *merge = app.add_subcommand("merge", "Fuse two graphs along an alignment");
  std::string merge_a, merge_b, alignment_path;
  bool keep_both = false;
  merge->add_option("a", merge_a)->required();
  merge->add_option("b", merge_b)->required();
  merge->add_option("--alignment", alignment_path, "Alignment TSV")->required();
  merge->add_flag("--no-prefer-newer", keep_both,
                  "Report every functional disagreement as a conflict");
  merge->add_option("-o", out, "Output .gkg (default stdout)");
  merge->add_option("--report", report_path, "Report file (default stderr)");
  merge->callback([&] {
    status = Merge(merge_a, merge_b, alignment_path, keep_both, out, report_path);
  });

  auto *render = app.add_subcommand("render", "Render a graph in one language");
  std::string render_path, lang = "en";
  render->add_option("--lang", lang, "Language code");
  render->add_option("graph", render_path)->required();
  render->add_option("-o", out, "Output TSV (default stdout)");
  render->callback([&] { status = Render(render_path, lang, out); });

  auto *iso = app.add_subcommand("isocheck", "Structural equality of two graphs");
  std::string iso_a, iso_b, lang_a = "en", lang_b = "en";
  iso->add_option("a", iso_a)->required();
  iso->add_option("b", iso_b)->required();
  iso->add_option("--lang-a", lang_a, "Render language for a");
  iso->add_option("--lang-b", lang_b, "Render language for b");
  iso->callback([&] { status = IsoCheck(iso_a, iso_b, lang_a, lang_b); });

  auto *eval = app.add_subcommand("eval", "Embedding studies");
  eval->require_subcommand(1);
  std::uint64_t seed = 42;
  std::size_t dim = 64;
  int trials = 100;
  auto *flat = eval->add_subcommand("flat", "Flat triple embedding study");
  flat->add_option("--seed", seed, "Seed");
  flat->add_option("--dim", dim, "Embedding dimension")->check(CLI::PositiveNumber);
  flat->add_option("--trials", trials, "Number of random suites")
      ->check(CLI::PositiveNumber);
  flat->callback([&] { std::cout << gkg::RunEvalFlat(seed, dim, trials); });
  auto *grounded = eval->add_subcommand("grounded", "Grounded signature study");
  grounded->add_option("--seed", seed, "Seed");
  grounded->add_option("--dim", dim, "Embedding dimension")
      ->check(CLI::PositiveNumber);
  grounded->callback([&] { std::cout << gkg::RunEvalGrounded(seed, dim); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp &e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp &e) {
    return app.exit(e);
  } catch (const CLI::ParseError &e) {
    app.exit(e);
    return kExitParse;
  } catch (const gkg::ParseError &e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const gkg::ValidationFailed &e) {
    std::cerr << "invalid input:\n" << e.report().ToTsv();
    return kExitDomain;
  } catch (const gkg::Error &e) {
    std::cerr << e.what() << "\n";
    return e.code() == gkg::ErrorCode::kIo ? kExitIo : kExitDomain;
  }
  return status;
}
