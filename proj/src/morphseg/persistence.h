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

// Line-based TSV model files. Every file starts with a header line naming
// the format and version; records are sorted so that equal models give
// byte-identical files. Counts are decimal integers and distances use the
// shortest decimal form that reads back to the same double.
//
//   morphseg-mdl v1 char_bits=<k>      text<TAB>split<TAB>count
//   morphseg-ml v1 total=<N>           morph<TAB>count
//   morphseg-dist v1 max_distance=<d>  morph<TAB>label<TAB>distance
//   (segmentation, no header)          word<TAB>morph1 morph2 ...

#ifndef MORPHSEG_PERSISTENCE_H_
#define MORPHSEG_PERSISTENCE_H_

#include <functional>
#include <istream>
#include <ostream>
#include <string>
#include <vector>

#include "morphseg/evaluator.h"
#include "morphseg/mdl_model.h"
#include "morphseg/ml_model.h"

namespace morphseg {

enum class ModelKind { kUnknown, kMdl, kMl, kDistances };

void SaveChunkStore(const ChunkStore &store, std::ostream &out);
ChunkStore LoadChunkStore(std::istream &in);

// Writes counts only; type usage is a property of a segmentation.
void SaveMorphStats(const MorphStats &stats, std::ostream &out);
MorphStats LoadMorphStats(std::istream &in);

void SaveDistanceTable(const DistanceTable &table, std::ostream &out);
DistanceTable LoadDistanceTable(std::istream &in);

// One line per word type, sorted by word.
void SaveSegmentation(const Segmentation &segmentation, std::ostream &out);
Segmentation LoadSegmentation(std::istream &in);

// One line per token: a type with count c is written c times. Reading
// counts repeated lines as tokens of the same type.
void SaveSegmentedCorpus(const SegmentedCorpus &corpus, std::ostream &out);
SegmentedCorpus LoadSegmentedCorpus(std::istream &in);

void WriteCostCurve(const std::vector<CostPoint> &curve, std::ostream &out);
std::vector<CostPoint> ReadCostCurve(std::istream &in);

// Looks at the header line only.
ModelKind DetectModelKind(std::istream &in);

// File wrappers; throw kIo when the file cannot be opened or written.
void WriteFile(const std::string &path,
               const std::function<void(std::ostream &)> &writer);
void ReadFile(const std::string &path,
              const std::function<void(std::istream &)> &reader);

}  // namespace morphseg

#endif  // MORPHSEG_PERSISTENCE_H_
