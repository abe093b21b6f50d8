/** Copyright 2026 The connview Authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * 	http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>

#include "json.hpp"

namespace {

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string quote(const std::string& s) {
  std::string out = "'";
  for (char c : s) {
    if (c == '\'') {
      out += "'\\''";
    } else {
      out += c;
    }
  }
  return out + "'";
}

CliRun run_cli(const std::vector<std::string>& args) {
  auto dir = std::filesystem::temp_directory_path();
  auto out = dir / ("connview_cli_out_" + std::to_string(::getpid()));
  auto err = dir / ("connview_cli_err_" + std::to_string(::getpid()));
  std::string cmd = quote(CONNVIEW_CLI_PATH);
  for (const auto& a : args) cmd += " " + quote(a);
  cmd += " >" + quote(out.string()) + " 2>" + quote(err.string());
  int status = std::system(cmd.c_str());
  CliRun r{WIFEXITED(status) ? WEXITSTATUS(status) : -1, slurp(out), slurp(err)};
  std::filesystem::remove(out);
  std::filesystem::remove(err);
  return r;
}

const std::string kGraph = CONNVIEW_DATA_DIR "/g0/g0.json";
const std::string kDsl =
    R"(PATHS LENGTH <= 2 FROM region = "west" TO region = "east")";

}  // namespace

TEST(CliTest, QueryPrintsSummary) {
  CliRun r = run_cli({"query", "--graph", kGraph, "--dsl", kDsl});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out,
            "paths=6\nstart_nodes=3\nend_nodes=2\nlength.1=1\nlength.2=5\n");
}

TEST(CliTest, MatrixCsv) {
  CliRun r = run_cli({"matrix", "--graph", kGraph, "--dsl", kDsl, "--format", "csv"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out.substr(0, r.out.find('\n')), ",F,G");
  EXPECT_NE(r.out.find("\nB,2,1\n"), std::string::npos) << r.out;

  r = run_cli({"matrix", "--nodes", CONNVIEW_DATA_DIR "/g0/nodes.csv", "--edges",
           CONNVIEW_DATA_DIR "/g0/edges.csv", "--dsl", kDsl, "--group-rows",
           "region"});
  EXPECT_EQ(r.out, ",F,G\n[region=west],3,3\n");
}

TEST(CliTest, TableAndJson) {
  CliRun r = run_cli({"table", "--graph", kGraph, "--dsl", kDsl});
  EXPECT_EQ(r.out, ",\"(1,2)\"\nD,4\nE,1\n");
  r = run_cli({"table", "--graph", kGraph, "--dsl", kDsl, "--format", "json"});
  EXPECT_EQ(r.code, 0);
  auto doc = nlohmann::json::parse(r.out);
  EXPECT_EQ(doc["cells"][0]["count"], 4);
}

TEST(CliTest, ReorderAndPaths) {
  CliRun r = run_cli({"reorder", "--graph", kGraph, "--dsl", kDsl, "--by",
               "attribute", "--attribute", "region"});
  EXPECT_EQ(r.code, 0) << r.err;
  r = run_cli({"reorder", "--graph", kGraph, "--dsl", kDsl});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out.substr(0, 5), ",F,G\n");

  r = run_cli({"paths", "--graph", kGraph, "--dsl", kDsl, "--row", "B", "--col", "F"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, "B>D>F\t1\n  B>D>F\te2,e5\nB>F\t1\n  B>F\te3\n");
}

TEST(CliTest, IngestWritesJson) {
  auto out = std::filesystem::temp_directory_path() / "connview_cli_g0.json";
  CliRun r = run_cli({"ingest", "--nodes", CONNVIEW_DATA_DIR "/g0/nodes.csv", "--edges",
               CONNVIEW_DATA_DIR "/g0/edges.csv", "--out", out.string()});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, "nodes=7\nedges=7\n");
  EXPECT_EQ(slurp(out), slurp(kGraph));
  std::filesystem::remove(out);
}

TEST(CliTest, ExitCodes) {
  CliRun r = run_cli({"query", "--graph", kGraph, "--dsl",
               R"(PATHS LENGTH <= 2 FRM region = "west" TO region = "east")"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("\n  PATHS LENGTH <= 2 FRM"), std::string::npos) << r.err;
  EXPECT_NE(r.err.find("\n                    ^\n"), std::string::npos) << r.err;

  r = run_cli({"query", "--graph", kGraph, "--dsl", kDsl, "--cap", "5"});
  EXPECT_EQ(r.code, 3);
  r = run_cli({"query", "--graph", "/nonexistent.json", "--dsl", kDsl});
  EXPECT_EQ(r.code, 2);
  r = run_cli({"query", "--graph", kGraph});
  EXPECT_EQ(r.code, 1);
  r = run_cli({"frobnicate"});
  EXPECT_EQ(r.code, 1);
  r = run_cli({"matrix", "--graph", kGraph, "--dsl", kDsl, "--group-rows", "nope"});
  EXPECT_EQ(r.code, 2);
}
