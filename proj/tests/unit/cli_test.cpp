// Copyright 2026 The nashcd Authors
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

#include <gtest/gtest.h>

#include <sys/wait.h>
#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace {

namespace fs = std::filesystem;

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    const auto* info = ::testing::UnitTest::GetInstance()->current_test_info();
    dir_ = fs::temp_directory_path() /
           ("nashcd_cli_" + std::string(info->name()) + "_" +
            std::to_string(::getpid()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  int cli(const std::string& args) {
    const std::string cmd = std::string("'") + NASHCD_CLI_PATH + "' " + args +
                            " >'" + (dir_ / "stdout").string() + "' 2>'" +
                            (dir_ / "stderr").string() + "'";
    const int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  }

  std::string read(const std::string& name) {
    std::ifstream in(dir_ / name);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
  }

  static std::string data(const char* name) {
    return "'" + (fs::path(NASHCD_DATA_DIR) / name).string() + "'";
  }

  std::string out() const { return "'" + (dir_ / "out").string() + "'"; }

  fs::path dir_;
};

TEST_F(CliTest, RunSucceeds) {
  fs::create_directories(dir_ / "out");
  EXPECT_EQ(cli("run --input " + data("southern_women.txt") + " --labels " +
                data("southern_women.labels") + " --out " + out() +
                " --summary-json --audit"),
            0)
      << read("stderr");
  EXPECT_NE(read("stdout").find("communities: 3 -> 3"), std::string::npos);
  EXPECT_TRUE(fs::exists(dir_ / "out" / "summary.json"));
  EXPECT_TRUE(fs::exists(dir_ / "out" / "legitimacy_ne_v.csv"));
}

TEST_F(CliTest, EmptyFileExitsTwo) {
  std::ofstream(dir_ / "empty.txt").close();
  EXPECT_EQ(cli("run --input '" + (dir_ / "empty.txt").string() + "' --out " +
                "'" + dir_.string() + "'"),
            2);
  EXPECT_NE(read("stderr").find("no edges"), std::string::npos);
}

TEST_F(CliTest, BadLineReportsLineNumber) {
  std::ofstream(dir_ / "bad.txt") << "0 1\n1 2\nx 3\n";
  EXPECT_EQ(cli("run --input '" + (dir_ / "bad.txt").string() + "'"), 2);
  EXPECT_NE(read("stderr").find("line 3"), std::string::npos);
}

TEST_F(CliTest, StepCapExitsThreeAndDumpsTrace) {
  fs::create_directories(dir_ / "out");
  EXPECT_EQ(cli("run --input " + data("southern_women.txt") + " --out " + out() +
                " --max-steps 1"),
            3);
  std::ifstream trace(dir_ / "out" / "trace.tsv");
  std::string header, first;
  ASSERT_TRUE(std::getline(trace, header));
  ASSERT_TRUE(std::getline(trace, first));
  EXPECT_EQ(first.rfind("1\tu7\t", 0), 0u);
}

TEST_F(CliTest, UsageErrorsExitOne) {
  EXPECT_EQ(cli(""), 1);
  EXPECT_EQ(cli("run"), 1);
  EXPECT_EQ(cli("run --input x --kind hexagonal"), 1);
  EXPECT_EQ(cli("run --input /nonexistent/file"), 1);
}

TEST_F(CliTest, ScoreAndGenerate) {
  fs::create_directories(dir_ / "out");
  ASSERT_EQ(cli("run --input " + data("karate.txt") + " --out " + out() +
                " --emit partition -q"),
            0);
  ASSERT_EQ(cli("score --input " + data("karate.txt") + " --partition '" +
                (dir_ / "out" / "partition.txt").string() + "'"),
            0);
  EXPECT_NE(read("stdout").find("nash_equilibrium: true"), std::string::npos);
  ASSERT_EQ(cli("generate --out '" + (dir_ / "g.txt").string() +
                "' --u 40 --v 90 --groups 4 --seed 2"),
            0);
  std::ifstream g(dir_ / "g.txt");
  std::string comment, header;
  std::getline(g, comment);
  std::getline(g, header);
  EXPECT_EQ(header, "%bipartite 40 90");
}

}  // namespace
