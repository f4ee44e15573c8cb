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


/*
 * C interface to the morphseg library.
 *
 * Objects are opaque handles created by *_new, *_load, *_train and similar
 * calls and released with the matching *_free. Every fallible call returns an
 * ms_status; on failure a description is available from ms_last_error() on
 * the calling thread until the next failing call. Strings returned through
 * char** out-parameters are owned by the caller and released with
 * ms_string_free().
 */

#ifndef MORPHSEG_MORPHSEG_H_
#define MORPHSEG_MORPHSEG_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define MORPHSEG_API __declspec(dllexport)
#else
#define MORPHSEG_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum ms_status {
  MS_OK = 0,
  MS_ERR_INVALID_ARGUMENT = 1,
  MS_ERR_INPUT = 2,
  MS_ERR_EMPTY_CORPUS = 3,
  MS_ERR_SIZE = 4,
  MS_ERR_NOT_TRAINED = 5,
  MS_ERR_PARSE = 6,
  MS_ERR_VERSION = 7,
  MS_ERR_IO = 8,
  MS_ERR_UNSEGMENTABLE = 9,
  MS_ERR_INTERNAL = 10
} ms_status;

typedef enum ms_model_kind {
  MS_MODEL_UNKNOWN = 0,
  MS_MODEL_MDL = 1,
  MS_MODEL_ML = 2,
  MS_MODEL_DISTANCES = 3
} ms_model_kind;

typedef struct ms_corpus ms_corpus;
typedef struct ms_mdl ms_mdl;
typedef struct ms_ml ms_ml;
typedef struct ms_segmentation ms_segmentation;
typedef struct ms_gold ms_gold;
typedef struct ms_evaluation ms_evaluation;
typedef struct ms_report ms_report;

typedef struct ms_cost {
  double corpus_bits;
  double codebook_bits;
  double total_bits;
} ms_cost;

typedef struct ms_mdl_config {
  int char_bits;
  int64_t dream_interval;     /* 0 disables dreaming */
  int dream_max_passes;
  double dream_min_improvement;
  int64_t curve_interval;     /* 0 records dreaming events only */
  uint64_t seed;
} ms_mdl_config;

typedef struct ms_ml_config {
  int iterations;
  double lambda;
  int reject;                 /* 0 turns off rejection and random fallback */
  uint64_t seed;
} ms_ml_config;

typedef struct ms_eval_config {
  int max_iters;
  double min_improvement;
  double max_distance;        /* negative: largest fitted distance + 10 */
} ms_eval_config;

MORPHSEG_API const char *ms_last_error(void);
MORPHSEG_API const char *ms_status_name(ms_status status);
MORPHSEG_API void ms_string_free(char *s);
MORPHSEG_API const char *ms_version(void);

MORPHSEG_API ms_status ms_detect_model_kind(const char *path,
                                            ms_model_kind *kind);

/* Corpus. alphabet is a preset name ("english", "finnish") or an explicit
 * character list; NULL means "english". */
MORPHSEG_API ms_status ms_corpus_load_file(const char *path,
                                           const char *alphabet, int lowercase,
                                           ms_corpus **out);
MORPHSEG_API ms_status ms_corpus_load_text(const char *text, size_t length,
                                           const char *alphabet, int lowercase,
                                           ms_corpus **out);
/* n_test == SIZE_MAX takes every token after the training part. */
MORPHSEG_API ms_status ms_corpus_split(const ms_corpus *corpus, size_t n_train,
                                       size_t n_test, ms_corpus **train,
                                       ms_corpus **test);
MORPHSEG_API size_t ms_corpus_num_tokens(const ms_corpus *corpus);
MORPHSEG_API size_t ms_corpus_num_types(const ms_corpus *corpus);
MORPHSEG_API ms_status ms_corpus_token(const ms_corpus *corpus, size_t index,
                                       const char **token);
MORPHSEG_API void ms_corpus_free(ms_corpus *corpus);

/* Recursive MDL model. */
MORPHSEG_API void ms_mdl_config_init(ms_mdl_config *config);
MORPHSEG_API ms_status ms_mdl_new(int char_bits, ms_mdl **out);
MORPHSEG_API ms_status ms_mdl_train(const ms_corpus *corpus,
                                    const ms_mdl_config *config, ms_mdl **out);
MORPHSEG_API ms_status ms_mdl_process_word(ms_mdl *model, const char *word);
MORPHSEG_API ms_status ms_mdl_dream(ms_mdl *model, uint64_t seed,
                                    int max_passes, double min_improvement,
                                    int *passes);
MORPHSEG_API ms_status ms_mdl_tracked_cost(const ms_mdl *model, ms_cost *cost);
MORPHSEG_API ms_status ms_mdl_total_cost(const ms_mdl *model, ms_cost *cost);
MORPHSEG_API size_t ms_mdl_num_morphs(const ms_mdl *model);
MORPHSEG_API size_t ms_mdl_num_chunks(const ms_mdl *model);
/* MS_OK if the chunk hierarchy is consistent; otherwise MS_ERR_INTERNAL with
 * the violation in ms_last_error(). */
MORPHSEG_API ms_status ms_mdl_check(const ms_mdl *model);
/* Morphs separated by single spaces. */
MORPHSEG_API ms_status ms_mdl_segment(const ms_mdl *model, const char *word,
                                      char **morphs);
MORPHSEG_API ms_status ms_mdl_save(const ms_mdl *model, const char *path);
MORPHSEG_API ms_status ms_mdl_load(const char *path, ms_mdl **out);
/* Cost curve recorded by ms_mdl_train, as CSV. */
MORPHSEG_API ms_status ms_mdl_save_cost_curve(const ms_mdl *model,
                                              const char *path);
MORPHSEG_API size_t ms_mdl_cost_curve_size(const ms_mdl *model);
MORPHSEG_API ms_status ms_mdl_cost_curve_point(const ms_mdl *model,
                                               size_t index, int64_t *tokens,
                                               double *avg_bits);
/* Segments the given tokens; unknown words are first learned by a private
 * copy of the model, which is left unchanged. */
MORPHSEG_API ms_status ms_mdl_segment_tokens(const ms_mdl *model,
                                             const char *const *tokens,
                                             size_t count,
                                             ms_segmentation **out);
MORPHSEG_API ms_status ms_mdl_segment_corpus(const ms_mdl *model,
                                             const ms_corpus *corpus,
                                             ms_segmentation **out);
MORPHSEG_API void ms_mdl_free(ms_mdl *model);

/* Viterbi-EM maximum-likelihood model. */
MORPHSEG_API void ms_ml_config_init(ms_ml_config *config);
MORPHSEG_API ms_status ms_ml_train(const ms_corpus *corpus,
                                   const ms_ml_config *config, ms_ml **out);
MORPHSEG_API size_t ms_ml_num_morphs(const ms_ml *model);
/* Initial cost followed by the cost after each iteration. */
MORPHSEG_API size_t ms_ml_cost_history(const ms_ml *model, double *costs,
                                       size_t capacity);
MORPHSEG_API ms_status ms_ml_save(const ms_ml *model, const char *path);
MORPHSEG_API ms_status ms_ml_load(const char *path, ms_ml **out);
/* Words seen in training keep their trained segmentation; other words are
 * segmented by Viterbi search, falling back to a random split seeded with
 * seed when no covering morphs exist. */
MORPHSEG_API ms_status ms_ml_segment_tokens(const ms_ml *model,
                                            const char *const *tokens,
                                            size_t count, uint64_t seed,
                                            ms_segmentation **out);
MORPHSEG_API ms_status ms_ml_segment_corpus(const ms_ml *model,
                                            const ms_corpus *corpus,
                                            uint64_t seed,
                                            ms_segmentation **out);
MORPHSEG_API void ms_ml_free(ms_ml *model);

/* Token-weighted segmentations, one file line per token. */
MORPHSEG_API ms_status ms_segmentation_load(const char *path,
                                            ms_segmentation **out);
MORPHSEG_API ms_status ms_segmentation_save(const ms_segmentation *seg,
                                            const char *path);
MORPHSEG_API ms_status ms_segmentation_get(const ms_segmentation *seg,
                                           const char *word, char **morphs);
MORPHSEG_API size_t ms_segmentation_num_types(const ms_segmentation *seg);
MORPHSEG_API int64_t ms_segmentation_num_tokens(const ms_segmentation *seg);
MORPHSEG_API void ms_segmentation_free(ms_segmentation *seg);

/* Gold analyses. tags_path may be NULL to keep every tag. */
MORPHSEG_API ms_status ms_gold_load(const char *path, const char *tags_path,
                                    ms_gold **out);
MORPHSEG_API size_t ms_gold_num_words(const ms_gold *gold);
MORPHSEG_API size_t ms_gold_num_warnings(const ms_gold *gold);
MORPHSEG_API const char *ms_gold_warning(const ms_gold *gold, size_t index);
MORPHSEG_API void ms_gold_free(ms_gold *gold);

/* Alignment evaluation. */
MORPHSEG_API void ms_eval_config_init(ms_eval_config *config);
MORPHSEG_API ms_status ms_evaluate(const ms_segmentation *train,
                                   const ms_segmentation *test,
                                   const ms_gold *gold,
                                   const ms_eval_config *config,
                                   ms_evaluation **out);
MORPHSEG_API double ms_evaluation_distance(const ms_evaluation *evaluation);
MORPHSEG_API double ms_evaluation_unseen_fraction(
    const ms_evaluation *evaluation);
MORPHSEG_API double ms_evaluation_training_distance(
    const ms_evaluation *evaluation);
MORPHSEG_API size_t ms_evaluation_num_warnings(const ms_evaluation *evaluation);
MORPHSEG_API const char *ms_evaluation_warning(const ms_evaluation *evaluation,
                                               size_t index);
MORPHSEG_API ms_status ms_evaluation_to_json(const ms_evaluation *evaluation,
                                             char **json);
MORPHSEG_API ms_status ms_evaluation_save_alignments(
    const ms_evaluation *evaluation, const char *path);
MORPHSEG_API ms_status ms_evaluation_save_distances(
    const ms_evaluation *evaluation, const char *path);
MORPHSEG_API void ms_evaluation_free(ms_evaluation *evaluation);

/* Metrics reports. */
MORPHSEG_API ms_status ms_report_from_mdl(const ms_mdl *model,
                                          const char *dataset,
                                          ms_report **out);
MORPHSEG_API ms_status ms_report_from_ml(const ms_ml *model, int char_bits,
                                         const char *dataset, ms_report **out);
MORPHSEG_API ms_status ms_report_set_evaluation(
    ms_report *report, const ms_evaluation *evaluation);
MORPHSEG_API ms_status ms_report_set_wall_time(ms_report *report,
                                               double seconds);
MORPHSEG_API double ms_report_total_cost(const ms_report *report);
MORPHSEG_API double ms_report_relative_codebook_cost(const ms_report *report);
MORPHSEG_API int64_t ms_report_codebook_morphs(const ms_report *report);
MORPHSEG_API ms_status ms_report_to_json(const ms_report *report, char **json);
MORPHSEG_API ms_status ms_report_table(const ms_report *const *reports,
                                       size_t count, char **table);
MORPHSEG_API void ms_report_free(ms_report *report);

#ifdef __cplusplus
}  /* extern "C" */
#endif

#endif  /* MORPHSEG_MORPHSEG_H_ */
