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

#include <algorithm>
#include <fstream>
#include <iterator>
#include <map>

#include "morphseg/errors.h"
#include "morphseg/text.h"

namespace morphseg {

namespace {

constexpr char kMdlFormat[] = "morphseg-mdl";
constexpr char kMlFormat[] = "morphseg-ml";
constexpr char kDistFormat[] = "morphseg-dist";
constexpr char kVersion[] = "v1";
constexpr char kCurveHeader[] = "tokens_processed,avg_word_cost_bits";

// Whole-file line access with line numbers for error messages.
class Lines {
 public:
  explicit Lines(std::istream &in) {
    std::string content((std::istreambuf_iterator<char>(in)),
                        std::istreambuf_iterator<char>());
    if (in.bad()) Fail(ErrorCode::kIo, "read error");
    if (!content.empty() && content.back() != '\n') {
      Fail(ErrorCode::kParse, "truncated file: last line has no newline");
    }
    std::u32string scratch;
    if (!DecodeUtf8(content, &scratch)) {
      Fail(ErrorCode::kParse, "file is not valid UTF-8");
    }
    size_t start = 0;
    while (start < content.size()) {
      size_t end = content.find('\n', start);
      lines_.push_back(content.substr(start, end - start));
      start = end + 1;
    }
  }

  size_t size() const { return lines_.size(); }
  const std::string &operator[](size_t i) const { return lines_[i]; }

  [[noreturn]] void FailAt(size_t index, const std::string &what) const {
    Fail(ErrorCode::kParse,
         "line " + std::to_string(index + 1) + ": " + what);
  }

 private:
  std::vector<std::string> lines_;
};

// Checks `<format> v1 key=value` and returns the value string.
std::string ParseHeader(const Lines &lines, const char *format,
                        const std::string &key) {
  if (lines.size() == 0) Fail(ErrorCode::kParse, "truncated file: no header");
  std::vector<std::string_view> parts = SplitFields(lines[0], ' ');
  if (parts.empty() || parts[0] != format) {
    lines.FailAt(0, std::string("expected a ") + format + " header");
  }
  if (parts.size() < 2 || parts[1] != kVersion) {
    Fail(ErrorCode::kVersion,
         std::string("unsupported ") + format + " version '" +
             (parts.size() < 2 ? "" : std::string(parts[1])) + "'");
  }
  std::string prefix = key + "=";
  if (parts.size() != 3 || parts[2].substr(0, prefix.size()) != prefix) {
    lines.FailAt(0, "expected " + prefix + "<value> in header");
  }
  return std::string(parts[2].substr(prefix.size()));
}

long long ParseCount(const Lines &lines, size_t index, std::string_view text,
                     long long min_value) {
  long long value = 0;
  if (!ParseInt64(text, &value) || value < min_value) {
    lines.FailAt(index, "bad integer '" + std::string(text) + "'");
  }
  return value;
}

void CheckMorphText(const Lines &lines, size_t index, std::string_view text) {
  if (text.empty()) lines.FailAt(index, "empty string field");
  for (char c : text) {
    if (IsSpace(c)) lines.FailAt(index, "whitespace inside a string field");
  }
}

std::string JoinMorphs(const Morphs &morphs) {
  std::string out;
  for (size_t i = 0; i < morphs.size(); ++i) {
    if (i > 0) out += ' ';
    out += morphs[i];
  }
  return out;
}

std::pair<std::string, Morphs> ParseSegmentationLine(const Lines &lines,
                                                     size_t index) {
  std::vector<std::string_view> fields = SplitFields(lines[index], '\t');
  if (fields.size() != 2) lines.FailAt(index, "expected word<TAB>morphs");
  CheckMorphText(lines, index, fields[0]);
  Morphs morphs;
  std::string joined;
  for (std::string_view morph : SplitFields(fields[1], ' ')) {
    CheckMorphText(lines, index, morph);
    morphs.emplace_back(morph);
    joined += morph;
  }
  if (joined != fields[0]) {
    lines.FailAt(index, "morphs do not concatenate to the word");
  }
  return {std::string(fields[0]), std::move(morphs)};
}

}  // namespace

void SaveChunkStore(const ChunkStore &store, std::ostream &out) {
  std::map<std::string, Chunk> sorted(store.chunks().begin(),
                                      store.chunks().end());
  out << kMdlFormat << ' ' << kVersion << " char_bits=" << store.char_bits()
      << '\n';
  for (const auto &[text, chunk] : sorted) {
    out << text << '\t' << chunk.split << '\t' << chunk.count << '\n';
  }
}

ChunkStore LoadChunkStore(std::istream &in) {
  Lines lines(in);
  std::string bits = ParseHeader(lines, kMdlFormat, "char_bits");
  long long char_bits = 0;
  if (!ParseInt64(bits, &char_bits) || char_bits < 1 || char_bits > 32) {
    lines.FailAt(0, "bad char_bits '" + bits + "'");
  }
  std::map<std::string, Chunk> chunks;
  for (size_t i = 1; i < lines.size(); ++i) {
    std::vector<std::string_view> fields = SplitFields(lines[i], '\t');
    if (fields.size() != 3) lines.FailAt(i, "expected text<TAB>split<TAB>count");
    CheckMorphText(lines, i, fields[0]);
    Chunk chunk;
    chunk.split = static_cast<int32_t>(ParseCount(lines, i, fields[1], 0));
    chunk.count = ParseCount(lines, i, fields[2], 1);
    if (!chunks.emplace(std::string(fields[0]), chunk).second) {
      lines.FailAt(i, "duplicate chunk '" + std::string(fields[0]) + "'");
    }
  }
  return ChunkStore::FromChunks(static_cast<int>(char_bits), chunks);
}

void SaveMorphStats(const MorphStats &stats, std::ostream &out) {
  std::map<std::string, int64_t> sorted(stats.counts.begin(),
                                        stats.counts.end());
  out << kMlFormat << ' ' << kVersion << " total=" << stats.total << '\n';
  for (const auto &[morph, count] : sorted) {
    out << morph << '\t' << count << '\n';
  }
}

MorphStats LoadMorphStats(std::istream &in) {
  Lines lines(in);
  std::string total_text = ParseHeader(lines, kMlFormat, "total");
  long long total = 0;
  if (!ParseInt64(total_text, &total) || total < 0) {
    lines.FailAt(0, "bad total '" + total_text + "'");
  }
  MorphStats stats;
  for (size_t i = 1; i < lines.size(); ++i) {
    std::vector<std::string_view> fields = SplitFields(lines[i], '\t');
    if (fields.size() != 2) lines.FailAt(i, "expected morph<TAB>count");
    CheckMorphText(lines, i, fields[0]);
    long long count = ParseCount(lines, i, fields[1], 1);
    if (!stats.counts.emplace(std::string(fields[0]), count).second) {
      lines.FailAt(i, "duplicate morph '" + std::string(fields[0]) + "'");
    }
    stats.total += count;
  }
  if (stats.total != total) {
    Fail(ErrorCode::kParse, "truncated file: counts sum to " +
                                std::to_string(stats.total) + ", header says " +
                                std::to_string(total));
  }
  return stats;
}

void SaveDistanceTable(const DistanceTable &table, std::ostream &out) {
  out << kDistFormat << ' ' << kVersion
      << " max_distance=" << FormatDouble(table.max_distance()) << '\n';
  for (const auto &[key, d] : table.distances()) {
    out << key.first << '\t' << key.second << '\t' << FormatDouble(d) << '\n';
  }
}

DistanceTable LoadDistanceTable(std::istream &in) {
  Lines lines(in);
  std::string max_text = ParseHeader(lines, kDistFormat, "max_distance");
  double max_distance = 0.0;
  if (!ParseDouble(max_text, &max_distance) || !(max_distance >= 0.0)) {
    lines.FailAt(0, "bad max_distance '" + max_text + "'");
  }
  std::map<DistanceTable::Key, double> distances;
  for (size_t i = 1; i < lines.size(); ++i) {
    std::vector<std::string_view> fields = SplitFields(lines[i], '\t');
    if (fields.size() != 3) {
      lines.FailAt(i, "expected morph<TAB>label<TAB>distance");
    }
    CheckMorphText(lines, i, fields[0]);
    CheckMorphText(lines, i, fields[1]);
    double d = 0.0;
    if (!ParseDouble(fields[2], &d) || !(d >= 0.0)) {
      lines.FailAt(i, "bad distance '" + std::string(fields[2]) + "'");
    }
    DistanceTable::Key key{std::string(fields[0]), std::string(fields[1])};
    if (!distances.emplace(std::move(key), d).second) {
      lines.FailAt(i, "duplicate pair");
    }
  }
  return DistanceTable(std::move(distances), max_distance);
}

void SaveSegmentation(const Segmentation &segmentation, std::ostream &out) {
  for (const auto &[word, morphs] : segmentation) {
    out << word << '\t' << JoinMorphs(morphs) << '\n';
  }
}

Segmentation LoadSegmentation(std::istream &in) {
  Lines lines(in);
  Segmentation segmentation;
  for (size_t i = 0; i < lines.size(); ++i) {
    if (lines[i].empty()) continue;
    auto [word, morphs] = ParseSegmentationLine(lines, i);
    if (!segmentation.emplace(word, std::move(morphs)).second) {
      lines.FailAt(i, "duplicate word '" + word + "'");
    }
  }
  return segmentation;
}

void SaveSegmentedCorpus(const SegmentedCorpus &corpus, std::ostream &out) {
  for (const auto &[word, seg] : corpus) {
    std::string line = word + '\t' + JoinMorphs(seg.morphs) + '\n';
    for (int64_t i = 0; i < seg.count; ++i) out << line;
  }
}

SegmentedCorpus LoadSegmentedCorpus(std::istream &in) {
  Lines lines(in);
  SegmentedCorpus corpus;
  for (size_t i = 0; i < lines.size(); ++i) {
    if (lines[i].empty()) continue;
    auto [word, morphs] = ParseSegmentationLine(lines, i);
    auto it = corpus.find(word);
    if (it == corpus.end()) {
      corpus.emplace(word, SegmentedWord{std::move(morphs), 1});
    } else if (it->second.morphs != morphs) {
      lines.FailAt(i, "conflicting segmentations of '" + word + "'");
    } else {
      ++it->second.count;
    }
  }
  return corpus;
}

void WriteCostCurve(const std::vector<CostPoint> &curve, std::ostream &out) {
  out << kCurveHeader << '\n';
  for (const CostPoint &point : curve) {
    out << point.tokens_processed << ',' << FormatDouble(point.avg_word_cost_bits)
        << '\n';
  }
}

std::vector<CostPoint> ReadCostCurve(std::istream &in) {
  Lines lines(in);
  if (lines.size() == 0 || lines[0] != kCurveHeader) {
    Fail(ErrorCode::kParse, "missing cost-curve header");
  }
  std::vector<CostPoint> curve;
  for (size_t i = 1; i < lines.size(); ++i) {
    std::vector<std::string_view> fields = SplitFields(lines[i], ',');
    if (fields.size() != 2) lines.FailAt(i, "expected tokens,cost");
    CostPoint point;
    point.tokens_processed = ParseCount(lines, i, fields[0], 0);
    if (!ParseDouble(fields[1], &point.avg_word_cost_bits)) {
      lines.FailAt(i, "bad cost '" + std::string(fields[1]) + "'");
    }
    curve.push_back(point);
  }
  return curve;
}

ModelKind DetectModelKind(std::istream &in) {
  std::string line;
  if (!std::getline(in, line)) return ModelKind::kUnknown;
  std::string_view id = SplitFields(line, ' ')[0];
  if (id == kMdlFormat) return ModelKind::kMdl;
  if (id == kMlFormat) return ModelKind::kMl;
  if (id == kDistFormat) return ModelKind::kDistances;
  return ModelKind::kUnknown;
}

void WriteFile(const std::string &path,
               const std::function<void(std::ostream &)> &writer) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) Fail(ErrorCode::kIo, "cannot open '" + path + "' for writing");
  writer(out);
  out.flush();
  if (!out) Fail(ErrorCode::kIo, "write to '" + path + "' failed");
}

void ReadFile(const std::string &path,
              const std::function<void(std::istream &)> &reader) {
  std::ifstream in(path, std::ios::binary);
  if (!in) Fail(ErrorCode::kIo, "cannot open '" + path + "'");
  reader(in);
}

}  // namespace morphseg
