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


#include <cstdlib>
#include <cstring>
#include <limits>
#include <memory>
#include <new>
#include <string>
#include <vector>

#include "morphseg/corpus.h"
#include "morphseg/errors.h"
#include "morphseg/evaluator.h"
#include "morphseg/mdl_model.h"
#include "morphseg/ml_model.h"
#include "morphseg/morphseg.h"
#include "morphseg/persistence.h"
#include "morphseg/report.h"
#include "morphseg/rng.h"

using morphseg::ErrorCode;
using morphseg::Fail;

struct ms_corpus {
  morphseg::Corpus corpus;
};

struct ms_mdl {
  morphseg::ChunkStore store;
  std::vector<morphseg::CostPoint> curve;
};

struct ms_ml {
  morphseg::MorphStats stats;
  // Empty for models read from disk.
  morphseg::Segmentation segmentation;
  std::vector<double> cost_history;
};

struct ms_segmentation {
  morphseg::SegmentedCorpus words;
};

struct ms_gold {
  morphseg::GoldAnalysis analyses;
  std::vector<std::string> warnings;
};

struct ms_evaluation {
  morphseg::Evaluation result;
};

struct ms_report {
  morphseg::MetricsReport report;
};

namespace {

thread_local std::string last_error;

template <typename F>
ms_status Guard(F &&body) {
  try {
    body();
    return MS_OK;
  } catch (const morphseg::Error &e) {
    last_error = e.what();
    return static_cast<ms_status>(e.code());
  } catch (const std::bad_alloc &) {
    last_error = "out of memory";
  } catch (const std::exception &e) {
    last_error = e.what();
  } catch (...) {
    last_error = "unknown error";
  }
  return MS_ERR_INTERNAL;
}

template <typename T>
void Require(T *ptr, const char *name) {
  if (ptr == nullptr) {
    Fail(ErrorCode::kInvalidArgument, std::string(name) + " is NULL");
  }
}

char *Dup(const std::string &s) {
  char *out = static_cast<char *>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.data(), s.size() + 1);
  return out;
}

morphseg::PreprocessConfig MakePreprocess(const char *alphabet,
                                          int lowercase) {
  morphseg::PreprocessConfig config;
  config.alphabet =
      morphseg::Alphabet::Parse(alphabet == nullptr ? "english" : alphabet);
  config.lowercase = lowercase != 0;
  return config;
}

ms_cost ToCost(const morphseg::MdlCost &cost) {
  return {cost.corpus_bits, cost.codebook_bits, cost.total_bits};
}

std::string JoinMorphs(const morphseg::Morphs &morphs) {
  std::string out;
  for (const std::string &m : morphs) {
    if (!out.empty()) out += ' ';
    out += m;
  }
  return out;
}

std::vector<std::string> CopyTokens(const char *const *tokens, size_t count) {
  if (count > 0) Require(tokens, "tokens");
  std::vector<std::string> out;
  out.reserve(count);
  for (size_t i = 0; i < count; ++i) {
    Require(tokens[i], "token");
    out.emplace_back(tokens[i]);
  }
  return out;
}

morphseg::TypeCounts CountTypes(const std::vector<std::string> &tokens) {
  morphseg::TypeCounts counts;
  for (const std::string &t : tokens) ++counts[t];
  return counts;
}

morphseg::SegmentedCorpus MdlSegment(const morphseg::ChunkStore &store,
                                     const std::vector<std::string> &tokens) {
  morphseg::ChunkStore scratch = store;
  morphseg::LearnUnknownWords(tokens, &scratch);
  morphseg::SegmentedCorpus out;
  for (const auto &[word, count] : CountTypes(tokens)) {
    out[word] = {scratch.Segment(word), count};
  }
  return out;
}

morphseg::SegmentedCorpus MlSegment(const ms_ml &model,
                                    const std::vector<std::string> &tokens,
                                    uint64_t seed) {
  morphseg::TypeCounts types = CountTypes(tokens);
  std::vector<std::string> unknown;
  morphseg::SegmentedCorpus out;
  for (const auto &[word, count] : types) {
    if (word.empty()) Fail(ErrorCode::kInvalidArgument, "empty word");
    auto it = model.segmentation.find(word);
    if (it != model.segmentation.end()) {
      out[word] = {it->second, count};
    } else {
      unknown.push_back(word);
    }
  }
  if (!unknown.empty()) {
    morphseg::Rng rng(seed);
    morphseg::PoissonSampler sampler(morphseg::MlConfig().lambda);
    morphseg::Segmentation fresh =
        morphseg::SegmentWithStats(unknown, model.stats, rng, sampler);
    for (auto &[word, morphs] : fresh) {
      out[word] = {std::move(morphs), types.at(word)};
    }
  }
  return out;
}

}  // namespace

extern "C" {

const char *ms_last_error(void) { return last_error.c_str(); }

const char *ms_status_name(ms_status status) {
  switch (status) {
    case MS_OK: return "ok";
    case MS_ERR_INVALID_ARGUMENT: return "invalid argument";
    case MS_ERR_INPUT: return "input error";
    case MS_ERR_EMPTY_CORPUS: return "empty corpus";
    case MS_ERR_SIZE: return "size error";
    case MS_ERR_NOT_TRAINED: return "not trained";
    case MS_ERR_PARSE: return "parse error";
    case MS_ERR_VERSION: return "version error";
    case MS_ERR_IO: return "i/o error";
    case MS_ERR_UNSEGMENTABLE: return "unsegmentable";
    case MS_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

void ms_string_free(char *s) { std::free(s); }

const char *ms_version(void) { return "1.0.0"; }

ms_status ms_detect_model_kind(const char *path, ms_model_kind *kind) {
  return Guard([&] {
    Require(path, "path");
    Require(kind, "kind");
    morphseg::ReadFile(path, [&](std::istream &in) {
      *kind = static_cast<ms_model_kind>(morphseg::DetectModelKind(in));
    });
  });
}

// Corpus.

ms_status ms_corpus_load_file(const char *path, const char *alphabet,
                              int lowercase, ms_corpus **out) {
  return Guard([&] {
    Require(path, "path");
    Require(out, "out");
    auto config = MakePreprocess(alphabet, lowercase);
    auto handle = std::make_unique<ms_corpus>();
    morphseg::ReadFile(path, [&](std::istream &in) {
      handle->corpus = morphseg::LoadCorpus(in, config);
    });
    *out = handle.release();
  });
}

ms_status ms_corpus_load_text(const char *text, size_t length,
                              const char *alphabet, int lowercase,
                              ms_corpus **out) {
  return Guard([&] {
    if (length > 0) Require(text, "text");
    Require(out, "out");
    auto config = MakePreprocess(alphabet, lowercase);
    auto handle = std::make_unique<ms_corpus>();
    handle->corpus = morphseg::LoadCorpusFromString(
        std::string_view(text == nullptr ? "" : text, length), config);
    *out = handle.release();
  });
}

ms_status ms_corpus_split(const ms_corpus *corpus, size_t n_train,
                          size_t n_test, ms_corpus **train, ms_corpus **test) {
  return Guard([&] {
    Require(corpus, "corpus");
    Require(train, "train");
    Require(test, "test");
    if (n_test == std::numeric_limits<size_t>::max()) {
      n_test = corpus->corpus.size() > n_train ? corpus->corpus.size() - n_train
                                               : 0;
    }
    auto parts = morphseg::SplitCorpus(corpus->corpus, n_train, n_test);
    auto a = std::make_unique<ms_corpus>(ms_corpus{std::move(parts.first)});
    auto b = std::make_unique<ms_corpus>(ms_corpus{std::move(parts.second)});
    *train = a.release();
    *test = b.release();
  });
}

size_t ms_corpus_num_tokens(const ms_corpus *corpus) {
  return corpus == nullptr ? 0 : corpus->corpus.size();
}

size_t ms_corpus_num_types(const ms_corpus *corpus) {
  return corpus == nullptr ? 0 : corpus->corpus.type_counts().size();
}

ms_status ms_corpus_token(const ms_corpus *corpus, size_t index,
                          const char **token) {
  return Guard([&] {
    Require(corpus, "corpus");
    Require(token, "token");
    if (index >= corpus->corpus.size()) {
      Fail(ErrorCode::kInvalidArgument, "token index out of range");
    }
    *token = corpus->corpus.tokens()[index].c_str();
  });
}

void ms_corpus_free(ms_corpus *corpus) { delete corpus; }

// Recursive MDL.

void ms_mdl_config_init(ms_mdl_config *config) {
  if (config == nullptr) return;
  morphseg::MdlConfig d;
  *config = {d.char_bits,  d.dream_interval, d.dream_max_passes,
             d.dream_min_improvement, d.curve_interval, d.seed};
}

ms_status ms_mdl_new(int char_bits, ms_mdl **out) {
  return Guard([&] {
    Require(out, "out");
    if (char_bits < 1 || char_bits > 32) {
      Fail(ErrorCode::kInvalidArgument, "char_bits must be in [1, 32]");
    }
    *out = new ms_mdl{morphseg::ChunkStore(char_bits), {}};
  });
}

ms_status ms_mdl_train(const ms_corpus *corpus, const ms_mdl_config *config,
                       ms_mdl **out) {
  return Guard([&] {
    Require(corpus, "corpus");
    Require(out, "out");
    morphseg::MdlConfig cfg;
    if (config != nullptr) {
      cfg.char_bits = config->char_bits;
      cfg.dream_interval = config->dream_interval;
      cfg.dream_max_passes = config->dream_max_passes;
      cfg.dream_min_improvement = config->dream_min_improvement;
      cfg.curve_interval = config->curve_interval;
      cfg.seed = config->seed;
    }
    auto handle = std::make_unique<ms_mdl>();
    handle->store = morphseg::TrainOnline(corpus->corpus, cfg, &handle->curve);
    *out = handle.release();
  });
}

ms_status ms_mdl_process_word(ms_mdl *model, const char *word) {
  return Guard([&] {
    Require(model, "model");
    Require(word, "word");
    model->store.ProcessWord(word);
  });
}

ms_status ms_mdl_dream(ms_mdl *model, uint64_t seed, int max_passes,
                       double min_improvement, int *passes) {
  return Guard([&] {
    Require(model, "model");
    if (max_passes < 1) {
      Fail(ErrorCode::kInvalidArgument, "max_passes must be at least 1");
    }
    morphseg::Rng rng(seed);
    int done = model->store.Dream(rng, max_passes, min_improvement);
    if (passes != nullptr) *passes = done;
  });
}

ms_status ms_mdl_tracked_cost(const ms_mdl *model, ms_cost *cost) {
  return Guard([&] {
    Require(model, "model");
    Require(cost, "cost");
    *cost = ToCost(model->store.TrackedCost());
  });
}

ms_status ms_mdl_total_cost(const ms_mdl *model, ms_cost *cost) {
  return Guard([&] {
    Require(model, "model");
    Require(cost, "cost");
    *cost = ToCost(morphseg::TotalCost(model->store));
  });
}

size_t ms_mdl_num_morphs(const ms_mdl *model) {
  return model == nullptr ? 0 : model->store.num_morphs();
}

size_t ms_mdl_num_chunks(const ms_mdl *model) {
  return model == nullptr ? 0 : model->store.chunks().size();
}

ms_status ms_mdl_check(const ms_mdl *model) {
  return Guard([&] {
    Require(model, "model");
    std::string problem = model->store.CheckConsistency();
    if (!problem.empty()) Fail(ErrorCode::kInternal, problem);
  });
}

ms_status ms_mdl_segment(const ms_mdl *model, const char *word,
                         char **morphs) {
  return Guard([&] {
    Require(model, "model");
    Require(word, "word");
    Require(morphs, "morphs");
    *morphs = Dup(JoinMorphs(model->store.Segment(word)));
  });
}

ms_status ms_mdl_save(const ms_mdl *model, const char *path) {
  return Guard([&] {
    Require(model, "model");
    Require(path, "path");
    morphseg::WriteFile(path, [&](std::ostream &out) {
      morphseg::SaveChunkStore(model->store, out);
    });
  });
}

ms_status ms_mdl_load(const char *path, ms_mdl **out) {
  return Guard([&] {
    Require(path, "path");
    Require(out, "out");
    auto handle = std::make_unique<ms_mdl>();
    morphseg::ReadFile(path, [&](std::istream &in) {
      handle->store = morphseg::LoadChunkStore(in);
    });
    *out = handle.release();
  });
}

ms_status ms_mdl_save_cost_curve(const ms_mdl *model, const char *path) {
  return Guard([&] {
    Require(model, "model");
    Require(path, "path");
    morphseg::WriteFile(path, [&](std::ostream &out) {
      morphseg::WriteCostCurve(model->curve, out);
    });
  });
}

size_t ms_mdl_cost_curve_size(const ms_mdl *model) {
  return model == nullptr ? 0 : model->curve.size();
}

ms_status ms_mdl_cost_curve_point(const ms_mdl *model, size_t index,
                                  int64_t *tokens, double *avg_bits) {
  return Guard([&] {
    Require(model, "model");
    if (index >= model->curve.size()) {
      Fail(ErrorCode::kInvalidArgument, "curve index out of range");
    }
    if (tokens != nullptr) *tokens = model->curve[index].tokens_processed;
    if (avg_bits != nullptr) *avg_bits = model->curve[index].avg_word_cost_bits;
  });
}

ms_status ms_mdl_segment_tokens(const ms_mdl *model, const char *const *tokens,
                                size_t count, ms_segmentation **out) {
  return Guard([&] {
    Require(model, "model");
    Require(out, "out");
    auto words = CopyTokens(tokens, count);
    *out = new ms_segmentation{MdlSegment(model->store, words)};
  });
}

ms_status ms_mdl_segment_corpus(const ms_mdl *model, const ms_corpus *corpus,
                                ms_segmentation **out) {
  return Guard([&] {
    Require(model, "model");
    Require(corpus, "corpus");
    Require(out, "out");
    *out = new ms_segmentation{
        MdlSegment(model->store, corpus->corpus.tokens())};
  });
}

void ms_mdl_free(ms_mdl *model) { delete model; }

// Viterbi-EM.

void ms_ml_config_init(ms_ml_config *config) {
  if (config == nullptr) return;
  morphseg::MlConfig d;
  *config = {d.iterations, d.lambda, d.reject ? 1 : 0, d.seed};
}

ms_status ms_ml_train(const ms_corpus *corpus, const ms_ml_config *config,
                      ms_ml **out) {
  return Guard([&] {
    Require(corpus, "corpus");
    Require(out, "out");
    morphseg::MlConfig cfg;
    if (config != nullptr) {
      cfg.iterations = config->iterations;
      cfg.lambda = config->lambda;
      cfg.reject = config->reject != 0;
      cfg.seed = config->seed;
    }
    morphseg::MlModel trained = morphseg::TrainEm(corpus->corpus, cfg);
    *out = new ms_ml{std::move(trained.stats), std::move(trained.segmentation),
                     std::move(trained.cost_history)};
  });
}

size_t ms_ml_num_morphs(const ms_ml *model) {
  return model == nullptr ? 0 : model->stats.counts.size();
}

size_t ms_ml_cost_history(const ms_ml *model, double *costs,
                          size_t capacity) {
  if (model == nullptr) return 0;
  for (size_t i = 0; i < capacity && i < model->cost_history.size(); ++i) {
    costs[i] = model->cost_history[i];
  }
  return model->cost_history.size();
}

ms_status ms_ml_save(const ms_ml *model, const char *path) {
  return Guard([&] {
    Require(model, "model");
    Require(path, "path");
    morphseg::WriteFile(path, [&](std::ostream &out) {
      morphseg::SaveMorphStats(model->stats, out);
    });
  });
}

ms_status ms_ml_load(const char *path, ms_ml **out) {
  return Guard([&] {
    Require(path, "path");
    Require(out, "out");
    auto handle = std::make_unique<ms_ml>();
    morphseg::ReadFile(path, [&](std::istream &in) {
      handle->stats = morphseg::LoadMorphStats(in);
    });
    *out = handle.release();
  });
}

ms_status ms_ml_segment_tokens(const ms_ml *model, const char *const *tokens,
                               size_t count, uint64_t seed,
                               ms_segmentation **out) {
  return Guard([&] {
    Require(model, "model");
    Require(out, "out");
    auto words = CopyTokens(tokens, count);
    *out = new ms_segmentation{MlSegment(*model, words, seed)};
  });
}

ms_status ms_ml_segment_corpus(const ms_ml *model, const ms_corpus *corpus,
                               uint64_t seed, ms_segmentation **out) {
  return Guard([&] {
    Require(model, "model");
    Require(corpus, "corpus");
    Require(out, "out");
    *out = new ms_segmentation{
        MlSegment(*model, corpus->corpus.tokens(), seed)};
  });
}

void ms_ml_free(ms_ml *model) { delete model; }

// Segmentations.

ms_status ms_segmentation_load(const char *path, ms_segmentation **out) {
  return Guard([&] {
    Require(path, "path");
    Require(out, "out");
    auto handle = std::make_unique<ms_segmentation>();
    morphseg::ReadFile(path, [&](std::istream &in) {
      handle->words = morphseg::LoadSegmentedCorpus(in);
    });
    *out = handle.release();
  });
}

ms_status ms_segmentation_save(const ms_segmentation *seg, const char *path) {
  return Guard([&] {
    Require(seg, "segmentation");
    Require(path, "path");
    morphseg::WriteFile(path, [&](std::ostream &out) {
      morphseg::SaveSegmentedCorpus(seg->words, out);
    });
  });
}

ms_status ms_segmentation_get(const ms_segmentation *seg, const char *word,
                              char **morphs) {
  return Guard([&] {
    Require(seg, "segmentation");
    Require(word, "word");
    Require(morphs, "morphs");
    auto it = seg->words.find(word);
    if (it == seg->words.end()) {
      Fail(ErrorCode::kNotTrained,
           std::string("word '") + word + "' is not in the segmentation");
    }
    *morphs = Dup(JoinMorphs(it->second.morphs));
  });
}

size_t ms_segmentation_num_types(const ms_segmentation *seg) {
  return seg == nullptr ? 0 : seg->words.size();
}

int64_t ms_segmentation_num_tokens(const ms_segmentation *seg) {
  if (seg == nullptr) return 0;
  int64_t total = 0;
  for (const auto &entry : seg->words) total += entry.second.count;
  return total;
}

void ms_segmentation_free(ms_segmentation *seg) { delete seg; }

// Gold analyses.

ms_status ms_gold_load(const char *path, const char *tags_path,
                       ms_gold **out) {
  return Guard([&] {
    Require(path, "path");
    Require(out, "out");
    morphseg::TagFilter filter;
    if (tags_path != nullptr) {
      morphseg::ReadFile(tags_path, [&](std::istream &in) {
        filter = morphseg::ParseTagFilter(in);
      });
    }
    auto handle = std::make_unique<ms_gold>();
    morphseg::ReadFile(path, [&](std::istream &in) {
      handle->analyses = morphseg::ParseGold(in, filter, &handle->warnings);
    });
    *out = handle.release();
  });
}

size_t ms_gold_num_words(const ms_gold *gold) {
  return gold == nullptr ? 0 : gold->analyses.size();
}

size_t ms_gold_num_warnings(const ms_gold *gold) {
  return gold == nullptr ? 0 : gold->warnings.size();
}

const char *ms_gold_warning(const ms_gold *gold, size_t index) {
  if (gold == nullptr || index >= gold->warnings.size()) return nullptr;
  return gold->warnings[index].c_str();
}

void ms_gold_free(ms_gold *gold) { delete gold; }

// Evaluation.

void ms_eval_config_init(ms_eval_config *config) {
  if (config == nullptr) return;
  morphseg::EmConfig d;
  *config = {d.max_iters, d.min_improvement, -1.0};
}

ms_status ms_evaluate(const ms_segmentation *train,
                      const ms_segmentation *test, const ms_gold *gold,
                      const ms_eval_config *config, ms_evaluation **out) {
  return Guard([&] {
    Require(train, "train");
    Require(test, "test");
    Require(gold, "gold");
    Require(out, "out");
    morphseg::EmConfig cfg;
    if (config != nullptr) {
      cfg.max_iters = config->max_iters;
      cfg.min_improvement = config->min_improvement;
      if (config->max_distance >= 0.0) cfg.max_distance = config->max_distance;
    }
    auto handle = std::make_unique<ms_evaluation>();
    handle->result =
        morphseg::Evaluate(train->words, test->words, gold->analyses, cfg);
    *out = handle.release();
  });
}

double ms_evaluation_distance(const ms_evaluation *evaluation) {
  return evaluation == nullptr ? 0.0 : evaluation->result.alignment_distance;
}

double ms_evaluation_unseen_fraction(const ms_evaluation *evaluation) {
  return evaluation == nullptr ? 0.0 : evaluation->result.unseen_pair_fraction;
}

double ms_evaluation_training_distance(const ms_evaluation *evaluation) {
  return evaluation == nullptr ? 0.0 : evaluation->result.training_distance;
}

size_t ms_evaluation_num_warnings(const ms_evaluation *evaluation) {
  return evaluation == nullptr ? 0 : evaluation->result.warnings.size();
}

const char *ms_evaluation_warning(const ms_evaluation *evaluation,
                                  size_t index) {
  if (evaluation == nullptr || index >= evaluation->result.warnings.size()) {
    return nullptr;
  }
  return evaluation->result.warnings[index].c_str();
}

ms_status ms_evaluation_to_json(const ms_evaluation *evaluation, char **json) {
  return Guard([&] {
    Require(evaluation, "evaluation");
    Require(json, "json");
    *json = Dup(morphseg::EvaluationToJson(evaluation->result));
  });
}

ms_status ms_evaluation_save_alignments(const ms_evaluation *evaluation,
                                        const char *path) {
  return Guard([&] {
    Require(evaluation, "evaluation");
    Require(path, "path");
    morphseg::WriteFile(path, [&](std::ostream &out) {
      morphseg::WriteAlignmentDump(evaluation->result.test_alignments, out);
    });
  });
}

ms_status ms_evaluation_save_distances(const ms_evaluation *evaluation,
                                       const char *path) {
  return Guard([&] {
    Require(evaluation, "evaluation");
    Require(path, "path");
    morphseg::WriteFile(path, [&](std::ostream &out) {
      morphseg::SaveDistanceTable(evaluation->result.table, out);
    });
  });
}

void ms_evaluation_free(ms_evaluation *evaluation) { delete evaluation; }

// Reports.

ms_status ms_report_from_mdl(const ms_mdl *model, const char *dataset,
                             ms_report **out) {
  return Guard([&] {
    Require(model, "model");
    Require(out, "out");
    *out = new ms_report{
        morphseg::ReportFromMdl(model->store, dataset ? dataset : "")};
  });
}

ms_status ms_report_from_ml(const ms_ml *model, int char_bits,
                            const char *dataset, ms_report **out) {
  return Guard([&] {
    Require(model, "model");
    Require(out, "out");
    *out = new ms_report{morphseg::ReportFromMl(model->stats, char_bits,
                                                dataset ? dataset : "")};
  });
}

ms_status ms_report_set_evaluation(ms_report *report,
                                   const ms_evaluation *evaluation) {
  return Guard([&] {
    Require(report, "report");
    Require(evaluation, "evaluation");
    morphseg::AttachEvaluation(evaluation->result, &report->report);
  });
}

ms_status ms_report_set_wall_time(ms_report *report, double seconds) {
  return Guard([&] {
    Require(report, "report");
    if (!(seconds >= 0.0)) {
      Fail(ErrorCode::kInvalidArgument, "wall time must be non-negative");
    }
    report->report.wall_time_sec = seconds;
  });
}

double ms_report_total_cost(const ms_report *report) {
  return report == nullptr ? 0.0 : report->report.total_mdl_cost;
}

double ms_report_relative_codebook_cost(const ms_report *report) {
  return report == nullptr ? 0.0 : report->report.relative_codebook_cost;
}

int64_t ms_report_codebook_morphs(const ms_report *report) {
  return report == nullptr ? 0 : report->report.codebook_morphs;
}

ms_status ms_report_to_json(const ms_report *report, char **json) {
  return Guard([&] {
    Require(report, "report");
    Require(json, "json");
    *json = Dup(morphseg::ReportToJson(report->report));
  });
}

ms_status ms_report_table(const ms_report *const *reports, size_t count,
                          char **table) {
  return Guard([&] {
    if (count > 0) Require(reports, "reports");
    Require(table, "table");
    std::vector<morphseg::MetricsReport> rows;
    for (size_t i = 0; i < count; ++i) {
      Require(reports[i], "report");
      rows.push_back(reports[i]->report);
    }
    *table = Dup(morphseg::FormatReportTable(rows));
  });
}

void ms_report_free(ms_report *report) { delete report; }

}  // extern "C"
