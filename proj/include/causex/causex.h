/* Copyright 2026 The causex Authors.
 * SPDX-License-Identifier: Apache-2.0 */

/* C interface to the causex library. Objects are opaque handles released with
 * the matching *_free function; every fallible call returns a cx_status and
 * leaves a message for cx_last_error() on the calling thread. Output paths
 * accept "-" for standard output. */

#ifndef CAUSEX_CAUSEX_H_
#define CAUSEX_CAUSEX_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#if defined(CAUSEX_BUILDING)
#define CX_API __declspec(dllexport)
#else
#define CX_API __declspec(dllimport)
#endif
#else
#define CX_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum cx_status {
  CX_OK = 0,
  CX_ERR_INVALID_ARGUMENT = 1,
  CX_ERR_IO = 2,
  CX_ERR_FORMAT = 3,
  CX_ERR_CONVERGENCE = 4,
  CX_ERR_MISMATCH = 5,
  CX_ERR_INTERNAL = 6
} cx_status;

typedef enum cx_classifier_kind {
  CX_NAIVE_BAYES = 0,
  CX_SVM_LINEAR = 1,
  CX_SVM_GAUSSIAN = 2,
  CX_SVM_POLYNOMIAL = 3
} cx_classifier_kind;

typedef enum cx_scheme { CX_BOOLEAN = 0, CX_TF = 1, CX_TFIDF = 2 } cx_scheme;

typedef struct cx_dataset cx_dataset;
typedef struct cx_stoplist cx_stoplist;
typedef struct cx_lexicon cx_lexicon;
typedef struct cx_model cx_model;
typedef struct cx_cv_result cx_cv_result;
typedef struct cx_grid_result cx_grid_result;

typedef struct cx_spec {
  cx_classifier_kind classifier;
  cx_scheme scheme;
  double alpha;
  double C;
  double sigma;
  double poly_c;
  int poly_degree;
  double tol;
  size_t min_freq;
} cx_spec;

typedef struct cx_cv_options {
  size_t k;
  uint64_t seed;
  size_t jobs;
  int stratified;
  int shared_vocab;
} cx_cv_options;

typedef struct cx_confusion {
  size_t tp;
  size_t fp;
  size_t tn;
  size_t fn;
} cx_confusion;

/* Undefined (0/0) measures are NaN. */
typedef struct cx_metrics {
  double accuracy;
  double error_rate;
  double recall;
  double precision;
  double specificity;
  double fpr;
  double fnr;
  double f_measure;
} cx_metrics;

typedef struct cx_combined_f {
  double f_avg;
  double f_pr_re;
  double f_tp_fp;
} cx_combined_f;

typedef struct cx_pipeline_counts {
  size_t raw_tokens;
  size_t content_tokens;
  size_t vocabulary;
} cx_pipeline_counts;

typedef struct cx_ir_summary {
  size_t reports;
  size_t matches;
  double mean_precision;
  double mean_recall;
  double mean_f;
} cx_ir_summary;

CX_API const char* cx_version(void);
CX_API const char* cx_rng_algorithm(void);
CX_API const char* cx_status_name(cx_status status);
CX_API const char* cx_last_error(void);

/* Labeled sentences. */
CX_API cx_status cx_dataset_load(const char* path, cx_dataset** out);
CX_API cx_status cx_dataset_split(const cx_dataset* ds, double train_fraction,
                                  uint64_t seed, cx_dataset** train,
                                  cx_dataset** test);
CX_API size_t cx_dataset_size(const cx_dataset* ds);
CX_API size_t cx_dataset_count(const cx_dataset* ds, int label);
CX_API cx_status cx_dataset_write(const cx_dataset* ds, const char* path,
                                  const char* header);
CX_API void cx_dataset_free(cx_dataset* ds);

/* Connective lexicon; NULL path selects the shipped one. */
CX_API cx_status cx_lexicon_load(const char* path, cx_lexicon** out);
CX_API size_t cx_lexicon_size(const cx_lexicon* lex);
CX_API void cx_lexicon_free(cx_lexicon* lex);

/* Stoplist; NULL path selects the shipped one. Connectives of `lex` (or of
 * the shipped lexicon when NULL) are never stopwords. */
CX_API cx_status cx_stoplist_load(const char* path, const cx_lexicon* lex,
                                  cx_stoplist** out);
CX_API size_t cx_stoplist_size(const cx_stoplist* stops);
CX_API void cx_stoplist_free(cx_stoplist* stops);

CX_API void cx_spec_init(cx_spec* spec);
CX_API cx_status cx_parse_classifier(const char* name, cx_classifier_kind* out);
CX_API cx_status cx_parse_scheme(const char* name, cx_scheme* out);
CX_API void cx_cv_options_init(cx_cv_options* options);

CX_API cx_status cx_metrics_compute(const cx_confusion* cm, cx_metrics* out);

/* Builds the vocabulary from `train` and writes it together with the weighted
 * train (and optional test) matrices. Matrix headers carry the vocabulary
 * fingerprint. */
CX_API cx_status cx_preprocess(const cx_dataset* train, const cx_dataset* test,
                               const cx_stoplist* stops, cx_scheme scheme,
                               size_t min_freq, const char* vocabulary_path,
                               const char* train_matrix_path,
                               const char* test_matrix_path,
                               const char* header, cx_pipeline_counts* counts);

CX_API cx_status cx_model_train(const cx_dataset* train,
                                const cx_stoplist* stops, const cx_spec* spec,
                                cx_model** out);
CX_API cx_status cx_model_load(const char* path, cx_model** out);
CX_API cx_status cx_model_save(const cx_model* model, const char* path,
                               const char* header);
CX_API size_t cx_model_vocabulary_size(const cx_model* model);
/* Writes the 16 hex digit vocabulary fingerprint plus NUL into buf[17]. */
CX_API void cx_model_fingerprint(const cx_model* model, char* buf);
CX_API void cx_model_free(cx_model* model);

/* Prediction TSV: doc_id, sentence_index, label, predicted, score. */
CX_API cx_status cx_model_predict_dataset(const cx_model* model,
                                          const cx_dataset* ds,
                                          const cx_stoplist* stops,
                                          const char* path, const char* header,
                                          cx_confusion* cm);
/* Prediction TSV for a matrix dump: row, predicted, score. Fails with
 * CX_ERR_MISMATCH when the dump was built on another vocabulary. */
CX_API cx_status cx_model_predict_matrix(const cx_model* model,
                                         const char* matrix_path,
                                         const char* path,
                                         const char* header);

CX_API cx_status cx_cross_validate(const cx_dataset* ds,
                                   const cx_stoplist* stops,
                                   const cx_spec* spec,
                                   const cx_cv_options* options,
                                   cx_cv_result** out);
CX_API size_t cx_cv_fold_count(const cx_cv_result* cv);
CX_API cx_status cx_cv_fold_confusion(const cx_cv_result* cv, size_t fold,
                                      cx_confusion* out);
CX_API void cx_cv_combined(const cx_cv_result* cv, cx_combined_f* out);
CX_API cx_status cx_cv_write_report(const cx_cv_result* cv, const char* path,
                                    const char* header);
CX_API void cx_cv_free(cx_cv_result* cv);

/* param is one of C, sigma, alpha, poly_c, poly_degree. */
CX_API cx_status cx_grid_search(const cx_dataset* ds, const cx_stoplist* stops,
                                const cx_spec* base, const char* param,
                                const double* values, size_t n_values,
                                const cx_cv_options* options,
                                cx_grid_result** out);
/* Stores the best grid value for `scheme` (CX_TF or CX_TFIDF), NaN if none. */
CX_API cx_status cx_grid_best(const cx_grid_result* grid, cx_scheme scheme,
                              double* out);
CX_API cx_status cx_grid_write_report(const cx_grid_result* grid,
                                      const char* path, const char* header);
CX_API void cx_grid_free(cx_grid_result* grid);

/* Causal sentence TSV: doc_id, sentence_index, category, connective, text. */
CX_API cx_status cx_extract(const char* const* report_paths, size_t n_reports,
                            const cx_lexicon* lex, int strict_ambiguous,
                            const char* path, const char* header,
                            size_t* n_matches);
/* IR report comparing extraction with an expert id file (doc_id and
 * sentence_index per line). One row per report plus a mean row. */
CX_API cx_status cx_eval_extract(const char* const* report_paths,
                                 size_t n_reports, const char* expert_path,
                                 const cx_lexicon* lex, int strict_ambiguous,
                                 const char* path, const char* header,
                                 cx_ir_summary* summary);

#ifdef __cplusplus
}
#endif

#endif /* CAUSEX_CAUSEX_H_ */
