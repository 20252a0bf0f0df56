// Copyright 2026 The AGSC Authors. All Rights Reserved.
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

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <string>

#include "gtest/gtest.h"
#include "support/fixtures.h"

namespace agsc {
namespace {

struct CliResult {
  int code = -1;
  std::string out;
};

CliResult RunCli(const std::string& args) {
  const std::string command =
      std::string(AGSC_CLI_PATH) + " " + args + " 2>/dev/null";
  CliResult result;
  FILE* pipe = ::popen(command.c_str(), "r");
  if (pipe == nullptr) return result;
  char buffer[4096];
  size_t n;
  while ((n = std::fread(buffer, 1, sizeof(buffer), pipe)) > 0) {
    result.out.append(buffer, n);
  }
  const int status = ::pclose(pipe);
  result.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = testing::MakeTempDir("cli");
    dataset_ = dir_ + "/data.jsonl";
    testing::WriteFile(
        dataset_,
        R"({"prompt_id":"a","prompt":"Who?","responses":["Ann is 5 age=5. It rained.","Ann age=5.","Ann age=6."],"factuality":0.9})"
        "\n"
        R"({"prompt_id":"b","prompt":"Who?","responses":["Bo is 7 age=7.","Bo age=3.","Bo age=3."],"factuality":0.1})"
        "\n"
        R"({"prompt_id":"c","prompt":"Who?","responses":["Cy is 2 age=2 and h=1.","Cy age=2.","Cy age=2."],"factuality":0.5})"
        "\n");
    config_ = dir_ + "/mock.conf";
    testing::WriteFile(config_, "pipeline.clock = simulated\n");
  }

  std::string dir_;
  std::string dataset_;
  std::string config_;
};

TEST_F(CliTest, ScoreEvalInspect) {
  CliResult score = RunCli("score --dataset " + dataset_ + " --config " +
                           config_ + " --out " + dir_ + "/out");
  ASSERT_EQ(score.code, 0);
  EXPECT_NE(score.out.find("agsc: scored 3 of 3 prompt(s), 0 failed"),
            std::string::npos)
      << score.out;
  auto files = testing::SnapshotDir(dir_ + "/out");
  EXPECT_EQ(files.size(), 4u);

  CliResult eval = RunCli("eval --reports " + dir_ + "/out");
  ASSERT_EQ(eval.code, 0);
  EXPECT_EQ(eval.out.rfind("variant\tpcc\tscc\tn\t", 0), 0u) << eval.out;
  EXPECT_NE(eval.out.find("\nagsc\t"), std::string::npos);

  CliResult written = RunCli("eval --reports " + dir_ + "/out --out " + dir_ +
                             "/table.tsv");
  ASSERT_EQ(written.code, 0);
  EXPECT_EQ(testing::ReadFile(dir_ + "/table.tsv"), eval.out);

  CliResult inspect =
      RunCli("inspect --report " + dir_ + "/out/0000_a.jsonl --sentence 1");
  ASSERT_EQ(inspect.code, 0);
  EXPECT_NE(inspect.out.find("It rained."), std::string::npos);
  EXPECT_NE(inspect.out.find("skip"), std::string::npos);
  EXPECT_EQ(
      RunCli("inspect --report " + dir_ + "/out/0000_a.jsonl --sentence 9")
          .code,
      1);
}

TEST_F(CliTest, AllVariantsWritesComparison) {
  CliResult score = RunCli("score --all-variants --dataset " + dataset_ +
                           " --config " + config_ + " --out " + dir_ + "/all");
  ASSERT_EQ(score.code, 0);
  EXPECT_TRUE(std::filesystem::exists(dir_ + "/all/comparison.tsv"));
  EXPECT_TRUE(std::filesystem::exists(dir_ + "/all/luq_atomic/summary.json"));
  const std::string table = testing::ReadFile(dir_ + "/all/comparison.tsv");
  EXPECT_NE(table.find("\nluq_sentence\t"), std::string::npos) << table;
}

TEST_F(CliTest, ExitCodes) {
  EXPECT_EQ(RunCli("--help").code, 0);
  EXPECT_EQ(RunCli("score").code, 2);
  EXPECT_EQ(RunCli("frobnicate").code, 2);
  testing::WriteFile(dir_ + "/bad.conf", "clustering.nope = 1\n");
  EXPECT_EQ(RunCli("score --dataset " + dataset_ + " --config " + dir_ +
                   "/bad.conf --out " + dir_ + "/x")
                .code,
            2);
  EXPECT_EQ(RunCli("score --dataset " + dataset_ + " --variant nope --out " +
                   dir_ + "/x")
                .code,
            2);
  EXPECT_EQ(RunCli("score --dataset " + dataset_).code, 2);
  EXPECT_EQ(RunCli("score --dataset " + dir_ + "/missing.jsonl --out " + dir_ +
                   "/x")
                .code,
            3);
  EXPECT_EQ(RunCli("eval --reports " + dir_ + "/missing").code, 3);
  testing::WriteFile(dir_ + "/broken.jsonl", "{nope");
  EXPECT_EQ(RunCli("inspect --report " + dir_ + "/broken.jsonl --sentence 0")
                .code,
            3);
}

}  // namespace
}  // namespace agsc
