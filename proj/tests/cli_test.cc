// Copyright 2026 The repairman Authors
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

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>

#include "cli.hpp"

namespace repairman::cli {
namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args) {
  args.insert(args.begin(), "repairman");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = dispatch(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::size_t lines(const std::string& s) {
  return static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n'));
}

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("repairman_cli_" + name)).string();
}

std::string slurp(const std::string& path) {
  std::ifstream f(path);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

TEST(Cli, Table1HasOneRowPerGridPoint) {
  std::string path = temp_path("table1.csv");
  Outcome o = run({"table1", "--grid", "1/20", "-o", path});
  EXPECT_EQ(o.code, 0);
  std::string csv = slurp(path);
  EXPECT_EQ(lines(csv), 102u);
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "s,table1_ratio,lp_rho,weights_min_b,slack");
  EXPECT_NE(csv.find("1/1,219/52,52/219,52/219,0/1"), std::string::npos);
  std::remove(path.c_str());
}

TEST(Cli, VerifyLemmasSingle) {
  Outcome o = run({"verify", "lemmas", "--which", "L5.1", "--rmax", "12"});
  EXPECT_EQ(o.code, 0) << o.err;
  EXPECT_EQ(o.out.substr(0, o.out.find('\n')), "lemma,r,k,min_yield,bound,argmin,tight,ok");
  EXPECT_EQ(o.out.find("FAIL"), std::string::npos);
  EXPECT_GT(lines(o.out), 12u);
}

TEST(Cli, VerifyCoverage) {
  Outcome o = run({"verify", "coverage", "--rmax", "6", "--jobs", "2"});
  EXPECT_EQ(o.code, 0) << o.err;
  EXPECT_EQ(lines(o.out), 12u);
  Outcome one = run({"verify", "coverage", "--which", "T12", "--format", "json"});
  EXPECT_EQ(one.code, 0);
  Json j = Json::parse(one.out);
  EXPECT_EQ(j[0]["table"], "T12");
  EXPECT_EQ(j[0]["mismatches"], "0");
}

TEST(Cli, VerifyBoundsReportsTheF3Breakpoint) {
  Outcome o = run({"verify", "bounds", "--grid", "1/20"});
  EXPECT_NE(o.code, 0);
  EXPECT_NE(o.out.find("f_continuity,f3@2/1,(s+1)/10=3/10 s/6=1/3,FAIL"), std::string::npos);
  EXPECT_NE(o.out.find("lp_ge_table1,grid 1/20,,PASS"), std::string::npos);
  std::size_t fails = 0;
  for (std::size_t p = o.out.find("FAIL"); p != std::string::npos; p = o.out.find("FAIL", p + 1)) ++fails;
  EXPECT_EQ(fails, 1u);
}

TEST(Cli, GenSolveOracleRoundTrip) {
  std::string inst = temp_path("inst.json");
  Outcome g = run({"gen", "--n", "6", "--metric", "tree", "--seed", "5", "--format", "json", "-o", inst});
  ASSERT_EQ(g.code, 0) << g.err;
  Outcome s = run({"solve", "-i", inst, "--speed", "3/2"});
  EXPECT_EQ(s.code, 0) << s.err;
  EXPECT_EQ(lines(s.out), 24u);
  EXPECT_NE(s.out.find(",PASS"), std::string::npos);
  Outcome sj = run({"solve", "-i", inst, "--speed", "3/2", "--format", "json", "--jobs", "3"});
  Json j = Json::parse(sj.out);
  EXPECT_EQ(j["report"].size(), 23u);
  EXPECT_TRUE(j.contains("run"));
  Outcome orc = run({"oracle", "-i", inst, "--speed", "1", "--format", "json"});
  EXPECT_EQ(orc.code, 0);
  EXPECT_EQ(Json::parse(orc.out)["profit"], "6/1");
  std::remove(inst.c_str());
}

TEST(Cli, DeterministicOutput) {
  Outcome a = run({"gen", "--n", "5", "--seed", "9"});
  Outcome b = run({"gen", "--n", "5", "--seed", "9"});
  EXPECT_EQ(a.out, b.out);
  Outcome c = run({"table1", "--grid", "1/4", "--jobs", "3"});
  Outcome d = run({"table1", "--grid", "1/4"});
  EXPECT_EQ(c.out, d.out);
}

TEST(Cli, RejectsDecimalsAndBadUsage) {
  std::string inst = temp_path("inst2.json");
  run({"gen", "--n", "3", "--format", "json", "-o", inst});
  Outcome dec = run({"solve", "-i", inst, "--speed", "1.5"});
  EXPECT_NE(dec.code, 0);
  EXPECT_NE(dec.err.find("error"), std::string::npos);
  EXPECT_NE(run({}).code, 0);
  EXPECT_NE(run({"frobnicate"}).code, 0);
  EXPECT_NE(run({"verify"}).code, 0);
  EXPECT_NE(run({"table1", "--format", "xml"}).code, 0);
  EXPECT_NE(run({"solve"}).code, 0);
  EXPECT_NE(run({"verify", "lemmas", "--which", "nope"}).code, 0);
  std::remove(inst.c_str());
}

TEST(Cli, CommonFlagsOnEverySubcommand) {
  for (std::vector<std::string> base :
       {std::vector<std::string>{"gen"}, {"table1", "--grid", "1"}, {"verify", "bounds", "--grid", "1"},
        {"verify", "lemmas", "--which", "T5.5", "--rmax", "2"},
        {"verify", "coverage", "--which", "T4", "--rmax", "2"}}) {
    base.insert(base.end(), {"--seed", "3", "--format", "json", "--jobs", "2"});
    Outcome o = run(base);
    EXPECT_TRUE(o.code == 0 || o.code == 1) << base[0] << " " << o.err;
    EXPECT_NO_THROW(Json::parse(o.out)) << base[0];
  }
}

}  // namespace
}  // namespace repairman::cli
