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


#include "morphseg/persistence.h"

#include <gtest/gtest.h>

#include <cmath>
#include <sstream>

#include "support/error_code.h"

namespace morphseg {
namespace {

template <typename T, typename Save>
std::string Dump(const T &value, Save save) {
  std::ostringstream out;
  save(value, out);
  return out.str();
}

ChunkStore LoadStore(const std::string &text) {
  std::istringstream in(text);
  return LoadChunkStore(in);
}

MorphStats LoadStats(const std::string &text) {
  std::istringstream in(text);
  return LoadMorphStats(in);
}

TEST(ChunkStoreFileTest, RoundTrip) {
  ChunkStore store;
  store.ProcessWord("aa");
  std::string text = Dump(store, SaveChunkStore);
  EXPECT_EQ(text, "morphseg-mdl v1 char_bits=5\na\t0\t2\naa\t1\t1\n");
  ChunkStore back = LoadStore(text);
  EXPECT_EQ(back.TrackedCost().total_bits, store.TrackedCost().total_bits);
  EXPECT_EQ(back.word_counts(), store.word_counts());
  EXPECT_EQ(Dump(back, SaveChunkStore), text);
}

TEST(ChunkStoreFileTest, ByteIdenticalForEqualStores) {
  ChunkStore a, b;
  for (const char *w : {"talo", "talot", "kissa", "kissat"}) a.ProcessWord(w);
  for (const char *w : {"talo", "talot", "kissa", "kissat"}) b.ProcessWord(w);
  EXPECT_EQ(Dump(a, SaveChunkStore), Dump(b, SaveChunkStore));
}

TEST(ChunkStoreFileTest, Errors) {
  std::string message;
  EXPECT_EQ(CodeOf([] { LoadStore("morphseg-mdl v0 char_bits=5\na\t0\t1\n"); }),
            ErrorCode::kVersion);
  EXPECT_EQ(CodeOf([] { LoadStore("morphseg-ml v1 total=1\na\t1\n"); }),
            ErrorCode::kParse);
  EXPECT_EQ(CodeOf(
                [] {
                  LoadStore("morphseg-mdl v1 char_bits=5\na\t0\t1\nb\tx\t1\n");
                },
                &message),
            ErrorCode::kParse);
  EXPECT_NE(message.find("line 3"), std::string::npos);
  EXPECT_EQ(CodeOf([] { LoadStore("morphseg-mdl v1 char_bits=5\na\t0\t1"); },
                   &message),
            ErrorCode::kParse);
  EXPECT_NE(message.find("truncated"), std::string::npos);
  EXPECT_EQ(CodeOf([] { LoadStore(""); }), ErrorCode::kParse);
  EXPECT_EQ(CodeOf([] { LoadStore("morphseg-mdl v1 char_bits=5\na\t0\t0\n"); }),
            ErrorCode::kParse);
  EXPECT_EQ(CodeOf([] {
              LoadStore("morphseg-mdl v1 char_bits=5\naa\t1\t1\n");
            }),
            ErrorCode::kParse);
  EXPECT_EQ(CodeOf([] {
              LoadStore("morphseg-mdl v1 char_bits=5\na\t0\t1\na\t0\t1\n");
            }),
            ErrorCode::kParse);
}

TEST(MorphStatsFileTest, RoundTrip) {
  MorphStats stats;
  stats.counts = {{"talo", 3}, {"ja", 5}, {"\xC3\xA4n", 1}};
  stats.total = 9;
  std::string text = Dump(stats, SaveMorphStats);
  EXPECT_EQ(text.substr(0, text.find('\n')), "morphseg-ml v1 total=9");
  MorphStats back = LoadStats(text);
  EXPECT_EQ(back.counts, stats.counts);
  EXPECT_EQ(back.total, 9);
  EXPECT_EQ(Dump(back, SaveMorphStats), text);
}

TEST(MorphStatsFileTest, Errors) {
  EXPECT_EQ(CodeOf([] { LoadStats("morphseg-ml v2 total=1\na\t1\n"); }),
            ErrorCode::kVersion);
  EXPECT_EQ(CodeOf([] { LoadStats("morphseg-ml v1 total=3\na\t1\n"); }),
            ErrorCode::kParse);
  EXPECT_EQ(CodeOf([] { LoadStats("morphseg-ml v1 total=1\na b\t1\n"); }),
            ErrorCode::kParse);
}

TEST(DistanceTableFileTest, FullPrecision) {
  DistanceTable table({{{"s", "PL"}, -std::log2(0.75)}, {{"s", "GEN"}, 2.0}},
                      12.0);
  std::string text = Dump(table, SaveDistanceTable);
  std::istringstream in(text);
  DistanceTable back = LoadDistanceTable(in);
  EXPECT_EQ(back, table);
  EXPECT_EQ(back.Distance("s", "PL"), -std::log2(0.75));
  EXPECT_EQ(Dump(back, SaveDistanceTable), text);
}

TEST(DistanceTableFileTest, Errors) {
  std::istringstream bad("morphseg-dist v1 max_distance=1\ns\tPL\t-1\n");
  EXPECT_EQ(CodeOf([&] { LoadDistanceTable(bad); }), ErrorCode::kParse);
  std::istringstream old("morphseg-dist v0 max_distance=1\n");
  EXPECT_EQ(CodeOf([&] { LoadDistanceTable(old); }), ErrorCode::kVersion);
}

TEST(SegmentationFileTest, RoundTripAndValidation) {
  Segmentation seg{{"taloja", {"talo", "ja"}}, {"kissa", {"kissa"}}};
  std::string text = Dump(seg, SaveSegmentation);
  EXPECT_EQ(text, "kissa\tkissa\ntaloja\ttalo ja\n");
  std::istringstream in(text);
  EXPECT_EQ(LoadSegmentation(in), seg);
  std::istringstream wrong("taloja\ttalo je\n");
  std::string message;
  EXPECT_EQ(CodeOf([&] { LoadSegmentation(wrong); }, &message),
            ErrorCode::kParse);
  EXPECT_NE(message.find("line 1"), std::string::npos);
  std::istringstream dup("a\ta\na\ta\n");
  EXPECT_EQ(CodeOf([&] { LoadSegmentation(dup); }), ErrorCode::kParse);
}

TEST(SegmentedCorpusFileTest, LinesAreTokens) {
  SegmentedCorpus corpus{{"talot", {{"talo", "t"}, 3}}, {"kissa", {{"kissa"}, 1}}};
  std::string text = Dump(corpus, SaveSegmentedCorpus);
  EXPECT_EQ(text, "kissa\tkissa\ntalot\ttalo t\ntalot\ttalo t\ntalot\ttalo t\n");
  std::istringstream in(text);
  SegmentedCorpus back = LoadSegmentedCorpus(in);
  EXPECT_EQ(back.at("talot").count, 3);
  EXPECT_EQ(back.at("talot").morphs, (Morphs{"talo", "t"}));
  std::istringstream conflict("talot\ttalo t\ntalot\ttal ot\n");
  EXPECT_EQ(CodeOf([&] { LoadSegmentedCorpus(conflict); }), ErrorCode::kParse);
}

TEST(CostCurveFileTest, RoundTrip) {
  std::vector<CostPoint> curve{{1000, 31.25}, {2000, 29.0 / 3.0}};
  std::string text = Dump(curve, WriteCostCurve);
  EXPECT_EQ(text.substr(0, text.find('\n')),
            "tokens_processed,avg_word_cost_bits");
  std::istringstream in(text);
  std::vector<CostPoint> back = ReadCostCurve(in);
  ASSERT_EQ(back.size(), 2u);
  EXPECT_EQ(back[1].tokens_processed, 2000);
  EXPECT_EQ(back[1].avg_word_cost_bits, 29.0 / 3.0);
}

TEST(DetectModelKindTest, ByHeader) {
  auto kind = [](const std::string &text) {
    std::istringstream in(text);
    return DetectModelKind(in);
  };
  EXPECT_EQ(kind("morphseg-mdl v1 char_bits=5\n"), ModelKind::kMdl);
  EXPECT_EQ(kind("morphseg-ml v1 total=0\n"), ModelKind::kMl);
  EXPECT_EQ(kind("morphseg-dist v1 max_distance=1\n"), ModelKind::kDistances);
  EXPECT_EQ(kind("hello\n"), ModelKind::kUnknown);
  EXPECT_EQ(kind(""), ModelKind::kUnknown);
}

TEST(FileTest, MissingFile) {
  EXPECT_EQ(CodeOf([] {
              ReadFile("/nonexistent/model", [](std::istream &) {});
            }),
            ErrorCode::kIo);
  EXPECT_EQ(CodeOf([] {
              WriteFile("/nonexistent/dir/model", [](std::ostream &) {});
            }),
            ErrorCode::kIo);
}

}  // namespace
}  // namespace morphseg
