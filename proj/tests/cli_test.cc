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

// Runs the gkg binary end to end.

#include <gtest/gtest.h>

#include <sys/wait.h>
#include <unistd.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include "support/test_util.h"

namespace {

struct CmdResult {
  int status = -1;
  std::string out;
};

CmdResult Gkg(const std::string &args) {
  std::string cmd = std::string(GKG_CLI) + " " + args + " 2>/dev/null";
  CmdResult r;
  FILE *pipe = popen(cmd.c_str(), "r");
  if (pipe == nullptr) return r;
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  int raw = pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

std::string Data(const char *name) {
  return std::string(GKG_TEST_DATA_DIR) + "/" + name;
}

std::filesystem::path TempDir() {
  auto dir = std::filesystem::temp_directory_path() /
             ("gkg_cli_test_" + std::to_string(::getpid()));
  std::filesystem::create_directories(dir);
  return dir;
}

std::string Slurp(const std::filesystem::path &p) {
  std::ifstream in(p);
  return std::string(std::istreambuf_iterator<char>(in), {});
}

TEST(CliTest, ValidateExitCodes) {
  EXPECT_EQ(Gkg("validate " + Data("worked_en.gkg")).status, 0);
  auto dir = TempDir();
  std::ofstream(dir / "bad.gkg") << "N ex:x C ont:Nope\n";
  CmdResult invalid = Gkg("validate " + (dir / "bad.gkg").string());
  EXPECT_EQ(invalid.status, 1);
  EXPECT_EQ(invalid.out.rfind("UnknownTypeTarget\tex:x", 0), 0u);
  std::ofstream(dir / "syntax.gkg") << "Q\n";
  EXPECT_EQ(Gkg("validate " + (dir / "syntax.gkg").string()).status, 2);
  EXPECT_EQ(Gkg("validate /nonexistent/file.gkg").status, 3);
}

TEST(CliTest, UsageErrors) {
  EXPECT_EQ(Gkg("").status, 2);
  EXPECT_EQ(Gkg("validate --bogus " + Data("worked_en.gkg")).status, 2);
  EXPECT_EQ(Gkg("eval flat --nope").status, 2);
  for (const char *sub : {"validate", "canonicalize", "align", "merge", "render",
                          "isocheck", "eval", "eval flat", "eval grounded"}) {
    CmdResult help = Gkg(std::string(sub) + " --help");
    EXPECT_EQ(help.status, 0) << sub;
    EXPECT_NE(help.out.find("Usage"), std::string::npos) << sub;
  }
}

TEST(CliTest, CanonicalizeAlignMerge) {
  auto dir = TempDir();
  std::string out = (dir / "rw.gkg").string();
  CmdResult c = Gkg("canonicalize --rules " + Data("birth.gkgr") + " --flat " +
              Data("rogerwaters.tsv") + " -o " + out);
  ASSERT_EQ(c.status, 0);
  EXPECT_EQ(Gkg("validate " + out).status, 0);

  std::string al = (dir / "al.tsv").string();
  ASSERT_EQ(Gkg("align --provider hash --seed 42 --dim 64 --threshold 0.9 " +
                Data("obama_r1.gkg") + " " + Data("obama_r2.gkg") + " -o " + al)
                .status,
            0);
  EXPECT_EQ(Slurp(al), "ent:BarakObama\tent:BarakObama\t1.0000\tMATCH\n");

  std::string merged = (dir / "merged.gkg").string();
  std::string report = (dir / "report.tsv").string();
  ASSERT_EQ(Gkg("merge " + Data("obama_r1.gkg") + " " + Data("obama_r2.gkg") +
                " --alignment " + al + " -o " + merged + " --report " + report)
                .status,
            0);
  EXPECT_NE(Slurp(report).find("updated\t"), std::string::npos);
  EXPECT_NE(Slurp(merged).find("Kalorama Washington"), std::string::npos);
  EXPECT_EQ(Slurp(merged).find("WhiteHouse"), std::string::npos);
  EXPECT_EQ(Gkg("validate " + merged).status, 0);
}

TEST(CliTest, RenderAndIsocheck) {
  CmdResult r = Gkg("render --lang fr " + Data("worked_fr.gkg"));
  ASSERT_EQ(r.status, 0);
  EXPECT_NE(r.out.find("ex:birth1\tnaissance\n"), std::string::npos);
  CmdResult iso = Gkg("isocheck " + Data("worked_en.gkg") + " " + Data("worked_ar.gkg") +
                " --lang-b ar");
  EXPECT_EQ(iso.status, 0);
  EXPECT_EQ(iso.out, "ISOMORPHIC\n");
  CmdResult diff = Gkg("isocheck " + Data("worked_en.gkg") + " " + Data("teaching.gkg"));
  EXPECT_EQ(diff.status, 1);
  EXPECT_EQ(diff.out.rfind("NOT_ISOMORPHIC\t", 0), 0u);
}

TEST(CliTest, EvalIsDeterministic) {
  CmdResult a = Gkg("eval flat --seed 42 --dim 64 --trials 100");
  CmdResult b = Gkg("eval flat --seed 42 --dim 64 --trials 100");
  ASSERT_EQ(a.status, 0);
  EXPECT_EQ(a.out, b.out);
  CmdResult g = Gkg("eval grounded --seed 42 --dim 64");
  EXPECT_EQ(g.status, 0);
  EXPECT_NE(g.out.find("changed_location\t0.7500\tNO_MATCH"), std::string::npos);
}

}  // namespace
