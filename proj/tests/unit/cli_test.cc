// Copyright 2026 The Morphseg Authors.
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

const std::string kCli = MORPHSEG_CLI_PATH;
const std::string kData = MORPHSEG_TEST_DATA_DIR;

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("morphseg_cli_" + std::to_string(::getpid()) + "_" +
            ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(dir_);
    std::ofstream corpus(Path("corpus.txt"));
    for (int i = 0; i < 30; ++i) {
      corpus << "the house houses housing walked walking walks talker\n"
                "talks talked talking the houses walked\n";
    }
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string Path(const std::string &name) const {
    return (dir_ / name).string();
  }
  int Run(const std::string &args, const std::string &out = "out.txt") const {
    std::string command = "'" + kCli + "' " + args + " > '" + Path(out) +
                          "' 2> '" + Path("err.txt") + "'";
    int status = std::system(command.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  }
  std::string Read(const std::string &name) const {
    std::ifstream in(Path(name));
    std::stringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
  }

  fs::path dir_;
};

TEST_F(CliTest, TrainAndSegmentMdl) {
  ASSERT_EQ(Run("train --method rec-mdl --corpus " + Path("corpus.txt") +
                " --model " + Path("m.model") + " --cost-curve " +
                Path("c.csv") + " --no-timing"),
            0)
      << Read("err.txt");
  EXPECT_NE(Read("out.txt").find("\"method\":\"rec-mdl\""), std::string::npos);
  EXPECT_EQ(Read("c.csv").rfind("tokens_processed,avg_word_cost_bits\n", 0),
            0u);
  std::ofstream(Path("words.txt")) << "houses\nwalkers\n";
  ASSERT_EQ(Run("segment --model " + Path("m.model") + " --words " +
                Path("words.txt")),
            0)
      << Read("err.txt");
  std::string out = Read("out.txt");
  EXPECT_EQ(out.rfind("houses\t", 0), 0u);
  EXPECT_NE(out.find("\nwalkers\t"), std::string::npos);
}

TEST_F(CliTest, TrainAndSegmentMl) {
  ASSERT_EQ(Run("train --method seq-ml --corpus " + Path("corpus.txt") +
                " --model " + Path("ml.model") + " --segmentation " +
                Path("ml.seg") + " --no-timing"),
            0)
      << Read("err.txt");
  EXPECT_NE(Read("out.txt").find("\"method\":\"seq-ml\""), std::string::npos);
  EXPECT_FALSE(Read("ml.seg").empty());
  std::ofstream(Path("words.txt")) << "houses\n";
  EXPECT_EQ(Run("segment --model " + Path("ml.model") + " --words " +
                Path("words.txt")),
            0);
}

TEST_F(CliTest, CompareIsDeterministicWithoutTiming) {
  std::string args = "compare --corpus " + kData +
                     "/kjv_en.txt --train-tokens 3000 --test-tokens 1000 "
                     "--gold " + kData + "/kjv_en_gold.tsv --tags " + kData +
                     "/english_tags.txt --no-timing";
  ASSERT_EQ(Run(args + " --model-dir " + Path("a") + " --report " +
                    Path("a.jsonl"),
                "a.txt"),
            0)
      << Read("err.txt");
  ASSERT_EQ(Run(args + " --model-dir " + Path("b") + " --report " +
                    Path("b.jsonl"),
                "b.txt"),
            0)
      << Read("err.txt");
  EXPECT_EQ(Read("a.txt"), Read("b.txt"));
  EXPECT_EQ(Read("a.jsonl"), Read("b.jsonl"));
  EXPECT_NE(Read("a.txt").find("Rec. MDL"), std::string::npos);
  EXPECT_NE(Read("a.txt").find("Seq. ML*"), std::string::npos);
  for (const char *name : {"rec-mdl.model", "seq-ml.model", "rec-mdl.test.seg",
                           "seq-ml.dist"}) {
    EXPECT_EQ(Read(std::string("a/") + name), Read(std::string("b/") + name))
        << name;
  }
}

TEST_F(CliTest, EvalPrintsJson) {
  std::string common = " --corpus " + kData + "/kjv_en.txt --train-tokens 2000";
  ASSERT_EQ(Run("train --method rec-mdl" + common + " --model " +
                Path("m.model") + " --segmentation " + Path("train.seg") +
                " --no-timing"),
            0)
      << Read("err.txt");
  ASSERT_EQ(Run("eval --train-seg " + Path("train.seg") + " --test-seg " +
                Path("train.seg") + " --gold " + kData + "/kjv_en_gold.tsv" +
                " --alignments " + Path("align.txt")),
            0)
      << Read("err.txt");
  EXPECT_NE(Read("out.txt").find("\"alignment_distance\""), std::string::npos);
  EXPECT_FALSE(Read("align.txt").empty());
}

TEST_F(CliTest, UsageErrorsExitWithTwo) {
  EXPECT_EQ(Run("train --corpus " + Path("corpus.txt") + " --model " +
                Path("m.model")),
            2);
  EXPECT_EQ(Run("train --method bogus --corpus " + Path("corpus.txt") +
                " --model " + Path("m.model")),
            2);
  EXPECT_EQ(Run("frobnicate"), 2);
  EXPECT_EQ(Run("train --method seq-ml --corpus " + Path("corpus.txt") +
                " --model " + Path("m.model") + " --cost-curve " +
                Path("c.csv")),
            2);
  EXPECT_EQ(Run("train --method rec-mdl --corpus " + Path("corpus.txt") +
                " --model " + Path("m.model") + " --char-bits 0"),
            2);
}

TEST_F(CliTest, DataErrorsExitWithThree) {
  std::ofstream(Path("empty.txt")) << "123 456 !!!\n";
  EXPECT_EQ(Run("train --method rec-mdl --corpus " + Path("empty.txt") +
                " --model " + Path("m.model")),
            3);
  EXPECT_FALSE(Read("err.txt").empty());
  std::ofstream(Path("old.model")) << "morphseg-mdl v0 char_bits=5\na\t0\t1\n";
  std::ofstream(Path("words.txt")) << "a\n";
  EXPECT_EQ(Run("segment --model " + Path("old.model") + " --words " +
                Path("words.txt")),
            3);
  EXPECT_EQ(Run("segment --model " + Path("missing.model") + " --words " +
                Path("words.txt")),
            3);
}

}  // namespace
