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


#include "morphseg/evaluator.h"

#include <gtest/gtest.h>

#include <cmath>
#include <sstream>

#include "support/error_code.h"
#include "support/oracles.h"

namespace morphseg {
namespace {

using Labels = std::vector<std::string>;

GoldAnalysis Parse(const std::string &text, const TagFilter &filter,
                   std::vector<std::string> *warnings = nullptr) {
  std::istringstream in(text);
  return ParseGold(in, filter, warnings);
}

TEST(ParseGoldTest, CompoundBaseAndFilteredTags) {
  TagFilter keep = std::set<std::string>{"PL", "PTV", "CMP", "<DER:ly>"};
  GoldAnalysis gold = Parse(
      "puutaloja\tPUU#TALO N PL PTV\n"
      "\n"
      "bigger\tBIG A CMP\n"
      "easily\tEASY <DER:ly> ADV\n",
      keep);
  ASSERT_EQ(gold.size(), 3u);
  EXPECT_EQ(gold.at("puutaloja").labels, (Labels{"PUU", "TALO", "PL", "PTV"}));
  EXPECT_EQ(gold.at("puutaloja").num_base, 2u);
  EXPECT_EQ(gold.at("bigger").labels, (Labels{"BIG", "CMP"}));
  EXPECT_EQ(gold.at("easily").labels, (Labels{"EASY", "<DER:ly>"}));
}

TEST(ParseGoldTest, NoFilterKeepsAllTags) {
  GoldAnalysis gold = Parse("bigger\tBIG A CMP\n", std::nullopt);
  EXPECT_EQ(gold.at("bigger").labels, (Labels{"BIG", "A", "CMP"}));
}

TEST(ParseGoldTest, MalformedLineReportsNumber) {
  std::string message;
  EXPECT_EQ(CodeOf([] { Parse("a\tA\nbroken line\n", std::nullopt); },
                   &message),
            ErrorCode::kParse);
  EXPECT_NE(message.find("line 2"), std::string::npos);
  EXPECT_EQ(CodeOf([] { Parse("a\t\n", std::nullopt); }), ErrorCode::kParse);
}

TEST(ParseGoldTest, EmptyLabelsDroppedWithWarning) {
  std::vector<std::string> warnings;
  GoldAnalysis gold =
      Parse("x\t# N\ny\tY N\n", std::set<std::string>{"PL"}, &warnings);
  EXPECT_EQ(gold.size(), 1u);
  EXPECT_EQ(gold.count("y"), 1u);
  ASSERT_EQ(warnings.size(), 1u);
}

TEST(ParseGoldTest, ShortestAnalysisWins) {
  GoldAnalysis gold = Parse("saw\tSEE PAST\nsaw\tSAW\n", std::nullopt);
  EXPECT_EQ(gold.at("saw").labels, Labels{"SAW"});
}

TEST(ParseTagFilterTest, TrimsAndSkipsBlanks) {
  std::istringstream in("PL\n  CMP \n\n<DER:ly>\n");
  EXPECT_EQ(ParseTagFilter(in),
            (std::set<std::string>{"PL", "CMP", "<DER:ly>"}));
}

TEST(AlignWordTest, DiagonalWhenPairsMatch) {
  DistanceTable table({{{"bigg", "BIG"}, 0.0}, {{"er", "CMP"}, 0.0}}, 12.0);
  AlignResult r = AlignWord({"bigg", "er"}, {"BIG", "CMP"}, table);
  EXPECT_EQ(r.alignment, (Alignment{{0, 0}, {1, 1}}));
  EXPECT_EQ(r.distance, 0.0);
}

TEST(AlignWordTest, ManyToOneAndOneToMany) {
  DistanceTable table({{{"puu", "PUU"}, 0.0},
                       {{"t", "TALO"}, 1.0},
                       {{"alo", "TALO"}, 0.0},
                       {{"ja", "PL"}, 0.0},
                       {{"ja", "PTV"}, 0.0}},
                      11.0);
  AlignResult r = AlignWord({"puu", "t", "alo", "ja"},
                            {"PUU", "TALO", "PL", "PTV"}, table);
  EXPECT_EQ(r.alignment, (Alignment{{0, 0}, {1, 1}, {2, 1}, {3, 2}, {3, 3}}));
  EXPECT_EQ(r.distance, 1.0);
}

TEST(AlignWordTest, SingleMorphCoversAllLabels) {
  DistanceTable table({}, 3.0);
  AlignResult r = AlignWord({"talossa"}, {"TALO", "N", "INE"}, table);
  EXPECT_EQ(r.alignment, (Alignment{{0, 0}, {0, 1}, {0, 2}}));
  EXPECT_EQ(r.distance, 9.0);
}

TEST(AlignWordTest, TiesPreferDiagonal) {
  DistanceTable table({}, 1.0);
  AlignResult r = AlignWord({"a", "b"}, {"A", "B"}, table);
  EXPECT_EQ(r.alignment, (Alignment{{0, 0}, {1, 1}}));
  EXPECT_EQ(CodeOf([&] { AlignWord({}, {"A"}, table); }),
            ErrorCode::kInvalidArgument);
}

TEST(AlignWordTest, MatchesBruteForce) {
  DistanceTable table({{{"a", "X"}, 0.5},
                       {{"b", "X"}, 2.0},
                       {{"b", "Y"}, 0.25},
                       {{"c", "Z"}, 1.0},
                       {{"a", "Z"}, 3.0}},
                      7.0);
  Morphs morphs{"a", "b", "c", "a"};
  Labels labels{"X", "Y", "Z", "X"};
  for (size_t n = 1; n <= 4; ++n) {
    for (size_t m = 1; m <= 4; ++m) {
      Morphs mm(morphs.begin(), morphs.begin() + n);
      Labels ll(labels.begin(), labels.begin() + m);
      double slow = oracle::BruteAlign(n, m, [&](size_t i, size_t j) {
        return table.Distance(mm[i], ll[j]);
      });
      EXPECT_EQ(AlignWord(mm, ll, table).distance, slow);
    }
  }
}

TEST(StringMatchTest, Similarity) {
  EXPECT_DOUBLE_EQ(SubstringSimilarity("alo", "TALO"), 0.75);
  EXPECT_DOUBLE_EQ(SubstringSimilarity("puu", "PUU"), 1.0);
  EXPECT_DOUBLE_EQ(SubstringSimilarity("ja", "PL"), 0.0);
  EXPECT_DOUBLE_EQ(SubstringSimilarity("", "PL"), 0.0);
}

TEST(StringMatchTest, InitialAlignment) {
  GoldEntry gold{{"PUU", "TALO"}, 2};
  EXPECT_EQ(StringMatchAlign({"puu", "t", "alo"}, gold),
            (Alignment{{0, 0}, {1, 1}, {2, 1}}));
  GoldEntry tagged{{"PUU", "TALO", "PL", "PTV"}, 2};
  Alignment a = StringMatchAlign({"puu", "t", "alo", "ja"}, tagged);
  EXPECT_EQ(a.front(), (AlignedPair{0, 0}));
  EXPECT_EQ(a.back(), (AlignedPair{3, 3}));
}

TEST(FitDistancesTest, ConditionalFrequency) {
  AlignmentCounts counts;
  counts.Add({"s"}, {"PL"}, {{0, 0}}, 3);
  counts.Add({"s"}, {"GEN"}, {{0, 0}}, 1);
  DistanceTable table = FitDistances(counts);
  EXPECT_DOUBLE_EQ(table.Distance("s", "PL"), -std::log2(0.75));
  EXPECT_NEAR(table.Distance("s", "PL"), 0.415, 1e-3);
  EXPECT_DOUBLE_EQ(table.Distance("s", "GEN"), 2.0);
  EXPECT_DOUBLE_EQ(table.max_distance(), 12.0);
  EXPECT_DOUBLE_EQ(FitDistances(counts, 4.5).max_distance(), 4.5);
}

TEST(FitDistancesTest, CountsEachPairOncePerWord) {
  AlignmentCounts counts;
  // "ja" twice in one word, aligned with PL both times.
  counts.Add({"ja", "ja"}, {"PL"}, {{0, 0}, {1, 0}}, 2);
  EXPECT_EQ(counts.morphs().at("ja"), 2);
  EXPECT_EQ(counts.pairs().at({"ja", "PL"}), 2);
  EXPECT_EQ(FitDistances(counts).Distance("ja", "PL"), 0.0);
}

SegmentedCorpus Unsplit(const std::vector<std::pair<std::string, int64_t>> &w) {
  SegmentedCorpus out;
  for (const auto &[word, count] : w) out[word] = {{word}, count};
  return out;
}

GoldAnalysis SmallGold() {
  return Parse(
      "talo\tTALO N\n"
      "talot\tTALO N PL\n"
      "taloja\tTALO N PL PTV\n"
      "kissa\tKISSA N\n"
      "kissat\tKISSA N PL\n"
      "kissoja\tKISSA N PL PTV\n",
      std::set<std::string>{"PL", "PTV"});
}

TEST(EmAlignTest, UnsplitWordsHaveZeroDistance) {
  EmResult r = EmAlign(Unsplit({{"talo", 3}, {"talot", 2}, {"kissa", 1}}),
                       SmallGold(), EmConfig());
  EXPECT_EQ(r.training_distance, 0.0);
  EXPECT_TRUE(r.excluded.empty());
}

TEST(EmAlignTest, ExcludesWordsWithoutGold) {
  EmResult r = EmAlign(Unsplit({{"talo", 1}, {"koira", 1}}), SmallGold(),
                       EmConfig());
  EXPECT_EQ(r.excluded, std::vector<std::string>{"koira"});
}

TEST(EmAlignTest, HistoryNeverBelowBest) {
  SegmentedCorpus seg{{"talo", {{"talo"}, 3}},
                      {"talot", {{"talo", "t"}, 2}},
                      {"taloja", {{"tal", "oja"}, 2}},
                      {"kissa", {{"kis", "sa"}, 1}},
                      {"kissat", {{"kissa", "t"}, 4}},
                      {"kissoja", {{"kisso", "ja"}, 1}}};
  EmResult r = EmAlign(seg, SmallGold(), EmConfig());
  ASSERT_FALSE(r.history.empty());
  for (double h : r.history) EXPECT_GE(h, r.training_distance);
}

TEST(EvaluateTest, IdenticalConsistentSetsScoreZero) {
  SegmentedCorpus seg{{"talot", {{"talo", "t"}, 2}},
                      {"kissat", {{"kissa", "t"}, 1}}};
  Evaluation e = Evaluate(seg, seg, SmallGold(), EmConfig());
  EXPECT_EQ(e.alignment_distance, 0.0);
  EXPECT_EQ(e.unseen_pairs, 0);
  EXPECT_EQ(e.unseen_pair_fraction, 0.0);
  EXPECT_EQ(e.aligned_pairs, 6);
}

TEST(EvaluateTest, UnseenMorphChargedMaximum) {
  SegmentedCorpus train{{"talot", {{"talo", "t"}, 2}}};
  SegmentedCorpus test{{"kissat", {{"kissa", "t"}, 1}}};
  Evaluation e = Evaluate(train, test, SmallGold(), EmConfig());
  const double dmax = e.table.max_distance();
  EXPECT_EQ(dmax, kMaxDistanceMargin);
  EXPECT_EQ(e.alignment_distance, dmax);
  EXPECT_EQ(e.unseen_pairs, 1);
  EXPECT_DOUBLE_EQ(e.unseen_pair_fraction, 0.5);
}

TEST(EvaluateTest, IdentitySegmenterPathology) {
  SegmentedCorpus train = Unsplit({{"talo", 3}, {"talot", 2}, {"kissa", 1}});
  SegmentedCorpus test = Unsplit({{"taloja", 1}, {"kissat", 2}, {"talo", 1}});
  Evaluation e = Evaluate(train, test, SmallGold(), EmConfig());
  EXPECT_EQ(e.training_distance, 0.0);
  EXPECT_GT(e.alignment_distance, 0.0);
  EXPECT_GT(e.unseen_pairs, 0);
}

TEST(EvaluateTest, TestWeightedByTokens) {
  SegmentedCorpus train{{"talot", {{"talo", "t"}, 1}}};
  SegmentedCorpus once{{"kissa", {{"kissa"}, 1}}};
  SegmentedCorpus thrice{{"kissa", {{"kissa"}, 3}}};
  GoldAnalysis gold = SmallGold();
  double d1 = Evaluate(train, once, gold, EmConfig()).alignment_distance;
  double d3 = Evaluate(train, thrice, gold, EmConfig()).alignment_distance;
  EXPECT_DOUBLE_EQ(d3, 3 * d1);
}

TEST(EmConfigTest, Validate) {
  EmConfig config;
  config.max_iters = 0;
  EXPECT_EQ(CodeOf([&] { config.Validate(); }), ErrorCode::kInvalidArgument);
  config = EmConfig();
  config.max_distance = -1.0;
  EXPECT_EQ(CodeOf([&] { config.Validate(); }), ErrorCode::kInvalidArgument);
}

TEST(AlignmentDumpTest, Format) {
  std::vector<WordAlignment> words{{"puutaloja",
                                    {"puu", "talo", "ja"},
                                    {"PUU", "TALO", "PL", "PTV"},
                                    {{0, 0}, {1, 1}, {2, 2}, {2, 3}},
                                    1}};
  std::ostringstream out;
  WriteAlignmentDump(words, out);
  EXPECT_EQ(out.str(), "puutaloja\tpuu:PUU talo:TALO ja:PL+PTV\n");
}

}  // namespace
}  // namespace morphseg
