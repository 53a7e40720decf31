// Copyright 2026 The causex Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "causex/classifier.hpp"
#include "causex/corpus.hpp"
#include "causex/preprocess.hpp"

namespace causex {

struct ConfusionMatrix {
  std::size_t tp = 0;
  std::size_t fp = 0;
  std::size_t tn = 0;
  std::size_t fn = 0;

  std::size_t actual_positive() const { return tp + fn; }     // P
  std::size_t actual_negative() const { return tn + fp; }     // N
  std::size_t predicted_positive() const { return tp + fp; }  // P'
  std::size_t predicted_negative() const { return tn + fn; }  // N'
  std::size_t total() const { return tp + fp + tn + fn; }

  ConfusionMatrix& operator+=(const ConfusionMatrix& o) {
    tp += o.tp;
    fp += o.fp;
    tn += o.tn;
    fn += o.fn;
    return *this;
  }
  bool operator==(const ConfusionMatrix&) const = default;
};

// Every measure is nullopt when its ratio is 0/0.
struct MetricSet {
  std::optional<double> accuracy;
  std::optional<double> error_rate;
  std::optional<double> recall;
  std::optional<double> precision;
  std::optional<double> specificity;
  std::optional<double> fpr;
  std::optional<double> fnr;
  std::optional<double> f_measure;
};

ConfusionMatrix confusion(std::span<const Label> predicted,
                          std::span<const Label> truth);

// F is 0 when tp = 0 and fp + fn > 0, undefined when all counts are 0.
MetricSet metrics(const ConfusionMatrix& cm);

// k disjoint folds covering 0..n-1 whose sizes differ by at most one. With
// labels, each class is dealt across folds separately (stratified).
std::vector<std::vector<std::size_t>> kfold_split(
    std::size_t n, std::size_t k, std::uint64_t seed,
    std::span<const Label> labels = {});

struct FoldResult {
  std::size_t fold_index = 0;
  ConfusionMatrix cm;
  MetricSet metrics;
  std::size_t train_size = 0;
  std::size_t test_size = 0;
  // Terms the fold's model projected onto.
  std::vector<std::string> vocabulary;
};

struct CvOptions {
  bool stratified = true;
  // Build one vocabulary and IDF from the whole dataset before folding
  // instead of per fold (leaks held-out terms; reproduces the original
  // protocol).
  bool shared_vocab = false;
  std::size_t jobs = 1;
  const StopList* stoplist = nullptr;  // builtin when null
};

std::vector<FoldResult> cross_validate(const LabeledDataset& ds,
                                       const ClassifierSpec& spec,
                                       std::size_t k, std::uint64_t seed,
                                       const CvOptions& options = {});

struct CombinedF {
  std::optional<double> f_avg;    // mean of per-fold F
  std::optional<double> f_pr_re;  // F of mean precision and mean recall
  std::optional<double> f_tp_fp;  // F of mean TP, FP, FN
  std::size_t undefined_f = 0;
  std::size_t undefined_precision = 0;
  std::size_t undefined_recall = 0;
};

CombinedF combine_f(std::span<const FoldResult> results);

enum class GridParam { C, Sigma, Alpha, PolyC, PolyDegree };

std::string_view to_string(GridParam p);
std::optional<GridParam> parse_grid_param(std::string_view s);

struct GridRow {
  double value = 0.0;
  std::optional<double> f_tf;
  std::optional<double> f_tfidf;
};

struct GridResult {
  GridParam param = GridParam::C;
  std::vector<GridRow> rows;  // in grid order
  std::optional<double> best_tf;
  std::optional<double> best_tfidf;

  // Rows ordered by F for the scheme, best first.
  std::vector<GridRow> ranked(WeightScheme scheme) const;
};

// Cross-validated F_tp,fp for every grid value under tf and tfidf weights.
// Best is the maximum; ties go to the smaller parameter value.
GridResult grid_search(const LabeledDataset& ds, const ClassifierSpec& base,
                       GridParam param, std::span<const double> values,
                       std::size_t k, std::uint64_t seed,
                       const CvOptions& options = {});

struct SentenceId {
  std::string doc_id;
  std::size_t index = 0;
  auto operator<=>(const SentenceId&) const = default;
};

struct IrEvalResult {
  std::set<SentenceId> relevant;   // E
  std::set<SentenceId> retrieved;  // A
  std::size_t overlap = 0;         // |E n A|
  std::optional<double> precision;
  std::optional<double> recall;
  std::optional<double> f;
};

IrEvalResult ir_eval(const std::set<SentenceId>& expert,
                     const std::set<SentenceId>& algorithm);

// Expert file: `doc_id<TAB>sentence_index` per line.
std::set<SentenceId> load_sentence_ids(const std::filesystem::path& path);

void write_cv_report(std::ostream& out, std::span<const FoldResult> folds,
                     const CombinedF& combined);
void write_grid_report(std::ostream& out, const GridResult& grid);

struct IrReportRow {
  std::string report;
  IrEvalResult result;
};
void write_ir_report(std::ostream& out, std::span<const IrReportRow> rows);

}  // namespace causex
