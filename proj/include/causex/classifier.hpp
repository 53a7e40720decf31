// Copyright 2026 The causex Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "causex/bayes.hpp"
#include "causex/corpus.hpp"
#include "causex/preprocess.hpp"
#include "causex/svm.hpp"
#include "causex/vectorize.hpp"

namespace causex {

enum class ClassifierKind { NaiveBayes, SvmLinear, SvmGaussian, SvmPolynomial };

std::string_view to_string(ClassifierKind k);
std::optional<ClassifierKind> parse_classifier_kind(std::string_view s);

// Classifier, weighting scheme and hyperparameters. Defaults are the tuned
// values: tf weights, C = 10, sigma = 16, alpha = 1, min_freq = 5.
struct ClassifierSpec {
  ClassifierKind kind = ClassifierKind::NaiveBayes;
  WeightScheme scheme = WeightScheme::Tf;
  double alpha = 1.0;
  double C = 10.0;
  double sigma = 16.0;
  double poly_c = 1.0;
  int poly_degree = 2;
  double tol = 1e-3;
  std::size_t min_freq = 5;

  Kernel kernel() const;
  std::string describe() const;
};

// Vocabulary, frozen IDF and a trained NB or SVM model: everything needed to
// label an analyzed sentence.
class TextClassifier {
 public:
  // Builds the vocabulary (and IDF, for tfidf) from `docs` unless fixed ones
  // are given.
  static TextClassifier train(std::span<const std::vector<std::string>> docs,
                              std::span<const Label> labels,
                              const ClassifierSpec& spec,
                              const Vocabulary* fixed_vocab = nullptr,
                              const IdfVector* fixed_idf = nullptr);

  const ClassifierSpec& spec() const { return spec_; }
  const Vocabulary& vocabulary() const { return vocab_; }
  const std::optional<IdfVector>& idf() const { return idf_; }
  const NbModel* nb() const { return std::get_if<NbModel>(&model_); }
  const SvmModel* svm() const { return std::get_if<SvmModel>(&model_); }

  SparseVector featurize(std::span<const std::string> tokens) const;
  // SVM decision value, or NB log-posterior difference (causal - other).
  double score(const SparseVector& x) const;
  Label predict(const SparseVector& x) const;
  Label predict_tokens(std::span<const std::string> tokens) const {
    return predict(featurize(tokens));
  }

  void write(std::ostream& out) const;
  static TextClassifier read(std::istream& in);

 private:
  ClassifierSpec spec_;
  Vocabulary vocab_;
  std::optional<IdfVector> idf_;
  std::variant<NbModel, SvmModel> model_;
};

}  // namespace causex
