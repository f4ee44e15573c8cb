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


// morphseg: train, apply and evaluate unsupervised morph segmenters.

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <limits>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "morphseg/morphseg.h"

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitData = 3;

struct Exit {
  int code;
};

void Check(ms_status status) {
  if (status == MS_OK) return;
  std::cerr << "morphseg: " << ms_status_name(status) << ": "
            << ms_last_error() << "\n";
  throw Exit{status == MS_ERR_INVALID_ARGUMENT ? kExitUsage : kExitData};
}

[[noreturn]] void UsageError(const std::string &message) {
  std::cerr << "morphseg: " << message << "\n";
  throw Exit{kExitUsage};
}

// Owns a C handle and releases it with the matching free function.
template <typename T, void (*Free)(T *)>
class Handle {
 public:
  Handle() = default;
  ~Handle() { Free(ptr_); }
  Handle(const Handle &) = delete;
  Handle &operator=(const Handle &) = delete;
  T *get() const { return ptr_; }
  T **out() {
    Free(ptr_);
    ptr_ = nullptr;
    return &ptr_;
  }

 private:
  T *ptr_ = nullptr;
};

using Corpus = Handle<ms_corpus, ms_corpus_free>;
using Mdl = Handle<ms_mdl, ms_mdl_free>;
using Ml = Handle<ms_ml, ms_ml_free>;
using Seg = Handle<ms_segmentation, ms_segmentation_free>;
using Gold = Handle<ms_gold, ms_gold_free>;
using Eval = Handle<ms_evaluation, ms_evaluation_free>;
using Report = Handle<ms_report, ms_report_free>;

std::string TakeString(char *s) {
  std::string out(s);
  ms_string_free(s);
  return out;
}

class Stopwatch {
 public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  double Seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                         start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

void WriteText(const std::string &path, const std::string &text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  out << text;
  if (!out) {
    std::cerr << "morphseg: cannot write '" << path << "'\n";
    throw Exit{kExitData};
  }
}

struct CorpusOptions {
  std::string path;
  std::string alphabet = "english";
  bool no_lowercase = false;

  void Add(CLI::App *cmd, bool required) {
    auto *opt = cmd->add_option("--corpus", path, "Plain-text corpus (UTF-8)");
    if (required) opt->required();
    cmd->add_option("--alphabet", alphabet,
                    "Preset (english, finnish) or explicit character list")
        ->capture_default_str();
    cmd->add_flag("--no-lowercase", no_lowercase, "Keep original case");
  }

  void Load(const std::string &file, Corpus *corpus) const {
    Check(ms_corpus_load_file(file.c_str(), alphabet.c_str(),
                              no_lowercase ? 0 : 1, corpus->out()));
  }
};

struct ModelOptions {
  int char_bits = 5;
  int64_t dream_interval = 20000;
  int dream_passes = 1;
  int iterations = 10;
  double lambda = 5.5;
  bool no_reject = false;
  uint64_t seed = 42;

  void AddShared(CLI::App *cmd) {
    cmd->add_option("--char-bits", char_bits, "Bits per codebook character")
        ->capture_default_str();
    cmd->add_option("--seed", seed, "Seed for every random choice")
        ->capture_default_str();
  }
  void AddMdl(CLI::App *cmd) {
    cmd->add_option("--dream-interval", dream_interval,
                    "Tokens between dreaming events (0: never)")
        ->capture_default_str();
    cmd->add_option("--dream-passes", dream_passes,
                    "Maximum passes per dreaming event")
        ->capture_default_str();
  }
  void AddMl(CLI::App *cmd, bool with_no_reject) {
    cmd->add_option("--iterations", iterations, "EM iterations")
        ->capture_default_str();
    cmd->add_option("--lambda", lambda, "Mean Poisson split interval")
        ->capture_default_str();
    if (with_no_reject) {
      cmd->add_flag("--no-reject", no_reject,
                    "Disable rejection and random fallback");
    }
  }

  ms_mdl_config Mdl() const {
    ms_mdl_config config;
    ms_mdl_config_init(&config);
    config.char_bits = char_bits;
    config.dream_interval = dream_interval;
    config.dream_max_passes = dream_passes;
    config.seed = seed;
    return config;
  }
  ms_ml_config Ml() const {
    ms_ml_config config;
    ms_ml_config_init(&config);
    config.iterations = iterations;
    config.lambda = lambda;
    config.reject = no_reject ? 0 : 1;
    config.seed = seed;
    return config;
  }
};

// Loads the corpus and keeps its first n tokens (all if n is 0).
void LoadTraining(const CorpusOptions &opts, size_t n, Corpus *train,
                  Corpus *rest) {
  Corpus full;
  opts.Load(opts.path, &full);
  if (n == 0) n = ms_corpus_num_tokens(full.get());
  Check(ms_corpus_split(full.get(), n, std::numeric_limits<size_t>::max(),
                        train->out(), rest->out()));
}

// train

struct TrainOptions {
  CorpusOptions corpus;
  ModelOptions model;
  std::string method;
  size_t train_tokens = 0;
  std::string model_path;
  std::string segmentation_path;
  std::string curve_path;
  bool no_timing = false;
};

int RunTrain(const TrainOptions &o) {
  Corpus train, rest;
  LoadTraining(o.corpus, o.train_tokens, &train, &rest);
  Report report;
  Seg seg;
  if (o.method == "rec-mdl") {
    ms_mdl_config config = o.model.Mdl();
    Mdl mdl;
    Stopwatch watch;
    Check(ms_mdl_train(train.get(), &config, mdl.out()));
    double seconds = watch.Seconds();
    Check(ms_mdl_save(mdl.get(), o.model_path.c_str()));
    if (!o.curve_path.empty()) {
      Check(ms_mdl_save_cost_curve(mdl.get(), o.curve_path.c_str()));
    }
    if (!o.segmentation_path.empty()) {
      Check(ms_mdl_segment_corpus(mdl.get(), train.get(), seg.out()));
    }
    Check(ms_report_from_mdl(mdl.get(), o.corpus.path.c_str(), report.out()));
    if (!o.no_timing) Check(ms_report_set_wall_time(report.get(), seconds));
  } else {
    if (!o.curve_path.empty()) {
      UsageError("--cost-curve applies to --method rec-mdl only");
    }
    ms_ml_config config = o.model.Ml();
    Ml ml;
    Stopwatch watch;
    Check(ms_ml_train(train.get(), &config, ml.out()));
    double seconds = watch.Seconds();
    Check(ms_ml_save(ml.get(), o.model_path.c_str()));
    if (!o.segmentation_path.empty()) {
      Check(ms_ml_segment_corpus(ml.get(), train.get(), o.model.seed,
                                 seg.out()));
    }
    Check(ms_report_from_ml(ml.get(), o.model.char_bits,
                            o.corpus.path.c_str(), report.out()));
    if (!o.no_timing) Check(ms_report_set_wall_time(report.get(), seconds));
  }
  if (seg.get() != nullptr) {
    Check(ms_segmentation_save(seg.get(), o.segmentation_path.c_str()));
  }
  char *json = nullptr;
  Check(ms_report_to_json(report.get(), &json));
  std::cout << TakeString(json) << "\n";
  return 0;
}

// segment

struct SegmentOptions {
  std::string model_path;
  std::string words_path;
  CorpusOptions words;
  uint64_t seed = 42;
};

int RunSegment(const SegmentOptions &o) {
  ms_model_kind kind = MS_MODEL_UNKNOWN;
  Check(ms_detect_model_kind(o.model_path.c_str(), &kind));
  Corpus words;
  o.words.Load(o.words_path, &words);
  Seg seg;
  if (kind == MS_MODEL_MDL) {
    Mdl mdl;
    Check(ms_mdl_load(o.model_path.c_str(), mdl.out()));
    Check(ms_mdl_segment_corpus(mdl.get(), words.get(), seg.out()));
  } else if (kind == MS_MODEL_ML) {
    Ml ml;
    Check(ms_ml_load(o.model_path.c_str(), ml.out()));
    Check(ms_ml_segment_corpus(ml.get(), words.get(), o.seed, seg.out()));
  } else {
    std::cerr << "morphseg: '" << o.model_path
              << "' is not a segmentation model\n";
    return kExitData;
  }
  size_t n = ms_corpus_num_tokens(words.get());
  for (size_t i = 0; i < n; ++i) {
    const char *token = nullptr;
    char *morphs = nullptr;
    Check(ms_corpus_token(words.get(), i, &token));
    Check(ms_segmentation_get(seg.get(), token, &morphs));
    std::cout << token << '\t' << TakeString(morphs) << '\n';
  }
  return 0;
}

// eval

struct EvalOptions {
  std::string train_seg;
  std::string test_seg;
  std::string gold;
  std::string tags;
  double max_distance = -1.0;
  int max_iters = 10;
  std::string alignments;
  std::string distances;

  void AddGold(CLI::App *cmd, bool required) {
    auto *g = cmd->add_option("--gold", gold, "Gold analyses (TSV)");
    if (required) g->required();
    cmd->add_option("--tags", tags, "Tags to keep, one per line");
    cmd->add_option("--max-distance", max_distance,
                    "Distance for unseen pairs (default: largest + 10)");
    cmd->add_option("--max-iters", max_iters, "Alignment EM iterations")
        ->capture_default_str();
  }

  void Evaluate(const ms_segmentation *train, const ms_segmentation *test,
                Eval *out) const {
    Gold g;
    Check(ms_gold_load(gold.c_str(), tags.empty() ? nullptr : tags.c_str(),
                       g.out()));
    for (size_t i = 0; i < ms_gold_num_warnings(g.get()); ++i) {
      std::cerr << "morphseg: warning: " << ms_gold_warning(g.get(), i)
                << "\n";
    }
    ms_eval_config config;
    ms_eval_config_init(&config);
    config.max_iters = max_iters;
    config.max_distance = max_distance;
    Check(ms_evaluate(train, test, g.get(), &config, out->out()));
    size_t skipped = ms_evaluation_num_warnings(out->get());
    if (skipped > 0) {
      std::cerr << "morphseg: " << skipped
                << " word types without gold analysis were skipped\n";
    }
  }
};

int RunEval(const EvalOptions &o) {
  Seg train, test;
  Check(ms_segmentation_load(o.train_seg.c_str(), train.out()));
  Check(ms_segmentation_load(o.test_seg.c_str(), test.out()));
  Eval eval;
  o.Evaluate(train.get(), test.get(), &eval);
  if (!o.alignments.empty()) {
    Check(ms_evaluation_save_alignments(eval.get(), o.alignments.c_str()));
  }
  if (!o.distances.empty()) {
    Check(ms_evaluation_save_distances(eval.get(), o.distances.c_str()));
  }
  char *json = nullptr;
  Check(ms_evaluation_to_json(eval.get(), &json));
  std::cout << TakeString(json) << "\n";
  return 0;
}

// compare

struct CompareOptions {
  CorpusOptions corpus;
  ModelOptions model;
  EvalOptions eval;
  size_t train_tokens = 100000;
  size_t test_tokens = 0;
  std::string dataset;
  std::string model_dir;
  std::string report_path;
  std::string curve_path;
  bool no_timing = false;
};

std::string Join(const std::string &dir, const std::string &name) {
  return (std::filesystem::path(dir) / name).string();
}

int RunCompare(const CompareOptions &o) {
  Corpus full, train, test;
  o.corpus.Load(o.corpus.path, &full);
  size_t available = ms_corpus_num_tokens(full.get());
  size_t n_test = o.test_tokens;
  if (n_test == 0 && available > o.train_tokens) {
    n_test = available - o.train_tokens;
  }
  Check(ms_corpus_split(full.get(), o.train_tokens, n_test, train.out(),
                        test.out()));
  std::string dataset = o.dataset.empty()
                            ? std::filesystem::path(o.corpus.path).stem().string()
                            : o.dataset;
  if (!o.model_dir.empty()) std::filesystem::create_directories(o.model_dir);
  const bool evaluate = !o.eval.gold.empty();

  Report mdl_report, ml_report;
  {
    ms_mdl_config config = o.model.Mdl();
    Mdl mdl;
    Stopwatch watch;
    Check(ms_mdl_train(train.get(), &config, mdl.out()));
    double seconds = watch.Seconds();
    Check(ms_report_from_mdl(mdl.get(), dataset.c_str(), mdl_report.out()));
    if (!o.no_timing) Check(ms_report_set_wall_time(mdl_report.get(), seconds));
    if (!o.curve_path.empty()) {
      Check(ms_mdl_save_cost_curve(mdl.get(), o.curve_path.c_str()));
    }
    Seg train_seg, test_seg;
    Check(ms_mdl_segment_corpus(mdl.get(), train.get(), train_seg.out()));
    Check(ms_mdl_segment_corpus(mdl.get(), test.get(), test_seg.out()));
    if (!o.model_dir.empty()) {
      Check(ms_mdl_save(mdl.get(), Join(o.model_dir, "rec-mdl.model").c_str()));
      Check(ms_segmentation_save(
          train_seg.get(), Join(o.model_dir, "rec-mdl.train.seg").c_str()));
      Check(ms_segmentation_save(
          test_seg.get(), Join(o.model_dir, "rec-mdl.test.seg").c_str()));
    }
    if (evaluate) {
      Eval eval;
      o.eval.Evaluate(train_seg.get(), test_seg.get(), &eval);
      Check(ms_report_set_evaluation(mdl_report.get(), eval.get()));
      if (!o.model_dir.empty()) {
        Check(ms_evaluation_save_distances(
            eval.get(), Join(o.model_dir, "rec-mdl.dist").c_str()));
      }
    }
  }
  {
    ms_ml_config config = o.model.Ml();
    Ml ml;
    Stopwatch watch;
    Check(ms_ml_train(train.get(), &config, ml.out()));
    double seconds = watch.Seconds();
    Check(ms_report_from_ml(ml.get(), o.model.char_bits, dataset.c_str(),
                            ml_report.out()));
    if (!o.no_timing) Check(ms_report_set_wall_time(ml_report.get(), seconds));
    Seg train_seg, test_seg;
    Check(ms_ml_segment_corpus(ml.get(), train.get(), o.model.seed,
                               train_seg.out()));
    Check(ms_ml_segment_corpus(ml.get(), test.get(), o.model.seed,
                               test_seg.out()));
    if (!o.model_dir.empty()) {
      Check(ms_ml_save(ml.get(), Join(o.model_dir, "seq-ml.model").c_str()));
      Check(ms_segmentation_save(
          train_seg.get(), Join(o.model_dir, "seq-ml.train.seg").c_str()));
      Check(ms_segmentation_save(
          test_seg.get(), Join(o.model_dir, "seq-ml.test.seg").c_str()));
    }
    if (evaluate) {
      Eval eval;
      o.eval.Evaluate(train_seg.get(), test_seg.get(), &eval);
      Check(ms_report_set_evaluation(ml_report.get(), eval.get()));
      if (!o.model_dir.empty()) {
        Check(ms_evaluation_save_distances(
            eval.get(), Join(o.model_dir, "seq-ml.dist").c_str()));
      }
    }
  }

  const ms_report *rows[] = {mdl_report.get(), ml_report.get()};
  char *table = nullptr;
  Check(ms_report_table(rows, 2, &table));
  std::cout << TakeString(table);
  if (!o.report_path.empty()) {
    std::string lines;
    for (const ms_report *row : rows) {
      char *json = nullptr;
      Check(ms_report_to_json(row, &json));
      lines += TakeString(json) + "\n";
    }
    WriteText(o.report_path, lines);
  }
  return 0;
}

}  // namespace

int main(int argc, char **argv) {
  CLI::App app{"Unsupervised morph segmentation and evaluation"};
  app.require_subcommand(1);
  app.set_version_flag("--version", ms_version());

  TrainOptions train;
  auto *train_cmd = app.add_subcommand("train", "Train a segmentation model");
  train_cmd->add_option("--method", train.method, "rec-mdl or seq-ml")
      ->required()
      ->check(CLI::IsMember({"rec-mdl", "seq-ml"}));
  train.corpus.Add(train_cmd, true);
  train_cmd->add_option("--train-tokens", train.train_tokens,
                        "Use the first N tokens (0: all)");
  train_cmd->add_option("--model", train.model_path, "Output model file")
      ->required();
  train_cmd->add_option("--segmentation", train.segmentation_path,
                        "Write the training segmentation, one line per token");
  train_cmd->add_option("--cost-curve", train.curve_path,
                        "Write the average word cost curve (CSV)");
  train_cmd->add_flag("--no-timing", train.no_timing,
                      "Leave the wall time out of the report");
  train.model.AddShared(train_cmd);
  train.model.AddMdl(train_cmd);
  train.model.AddMl(train_cmd, true);

  SegmentOptions segment;
  auto *segment_cmd = app.add_subcommand("segment", "Segment words");
  segment_cmd->add_option("--model", segment.model_path, "Model file")
      ->required();
  segment_cmd->add_option("--words", segment.words_path, "Words to segment")
      ->required();
  segment_cmd->add_option("--alphabet", segment.words.alphabet,
                          "Preset or explicit character list")
      ->capture_default_str();
  segment_cmd->add_flag("--no-lowercase", segment.words.no_lowercase,
                        "Keep original case");
  segment_cmd->add_option("--seed", segment.seed,
                          "Seed for random fallback splits")
      ->capture_default_str();

  EvalOptions eval;
  auto *eval_cmd =
      app.add_subcommand("eval", "Score a test segmentation against gold");
  eval_cmd->add_option("--train-seg", eval.train_seg, "Training segmentation")
      ->required();
  eval_cmd->add_option("--test-seg", eval.test_seg, "Test segmentation")
      ->required();
  eval.AddGold(eval_cmd, true);
  eval_cmd->add_option("--alignments", eval.alignments,
                       "Write the test alignments");
  eval_cmd->add_option("--distances", eval.distances,
                       "Write the fitted distance table");

  CompareOptions compare;
  auto *compare_cmd = app.add_subcommand(
      "compare", "Train and evaluate both methods on one corpus");
  compare.corpus.Add(compare_cmd, true);
  compare_cmd->add_option("--train-tokens", compare.train_tokens,
                          "Training tokens")
      ->capture_default_str();
  compare_cmd->add_option("--test-tokens", compare.test_tokens,
                          "Test tokens after the training part (0: the rest)");
  compare_cmd->add_option("--dataset", compare.dataset,
                          "Dataset name in reports");
  compare_cmd->add_option("--model-dir", compare.model_dir,
                          "Directory for models and segmentations");
  compare_cmd->add_option("--report", compare.report_path,
                          "Write the reports as JSON lines");
  compare_cmd->add_option("--cost-curve", compare.curve_path,
                          "Write the rec-mdl cost curve (CSV)");
  compare_cmd->add_flag("--no-timing", compare.no_timing,
                        "Leave wall times out of the reports");
  compare.eval.AddGold(compare_cmd, false);
  compare.model.AddShared(compare_cmd);
  compare.model.AddMdl(compare_cmd);
  compare.model.AddMl(compare_cmd, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success &e) {
    return app.exit(e);
  } catch (const CLI::ParseError &e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (train_cmd->parsed()) return RunTrain(train);
    if (segment_cmd->parsed()) return RunSegment(segment);
    if (eval_cmd->parsed()) return RunEval(eval);
    if (compare_cmd->parsed()) return RunCompare(compare);
  } catch (const Exit &e) {
    return e.code;
  } catch (const std::exception &e) {
    std::cerr << "morphseg: " << e.what() << "\n";
    return kExitData;
  }
  return kExitUsage;
}
