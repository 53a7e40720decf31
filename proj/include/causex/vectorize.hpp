// Copyright 2026 The causex Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "causex/preprocess.hpp"

namespace causex {

enum class WeightScheme { Boolean, Tf, TfIdf };

std::string_view to_string(WeightScheme s);
std::optional<WeightScheme> parse_weight_scheme(std::string_view s);

// Sparse vector with strictly increasing column indices and non-zero values.
class SparseVector {
 public:
  struct Entry {
    std::uint32_t col;
    double value;
  };

  SparseVector() = default;
  explicit SparseVector(std::size_t dim) : dim_(dim) {}
  static SparseVector from_dense(std::span<const double> dense);

  std::size_t dim() const { return dim_; }
  const std::vector<Entry>& entries() const { return entries_; }
  std::size_t nnz() const { return entries_.size(); }

  // Appends an entry; columns must be pushed in increasing order. Zeros are
  // dropped.
  void push(std::uint32_t col, double value);

  double sum() const;
  double squared_norm() const;
  std::vector<double> to_dense() const;

 private:
  std::size_t dim_ = 0;
  std::vector<Entry> entries_;
};

double dot(const SparseVector& a, const SparseVector& b);
double squared_distance(const SparseVector& a, const SparseVector& b);

// Row-major documents x terms matrix under one weighting scheme.
struct DocTermMatrix {
  std::size_t cols = 0;
  WeightScheme scheme = WeightScheme::Tf;
  std::string vocab_fingerprint;
  std::vector<SparseVector> rows;

  std::size_t n_rows() const { return rows.size(); }
};

struct IdfVector {
  std::vector<double> values;  // one per vocabulary column
  std::size_t n_docs = 0;
};

// Occurrences of each vocabulary term; out-of-vocabulary tokens ignored.
SparseVector term_counts(std::span<const std::string> tokens,
                         const Vocabulary& vocab);

SparseVector boolean_weights(const SparseVector& counts);
SparseVector tf_weights(const SparseVector& counts);

// Natural-log inverse document frequency over a matrix of raw counts.
// Columns present in no document get 0.
IdfVector compute_idf(const DocTermMatrix& counts);
SparseVector tfidf_weights(const SparseVector& tf, const IdfVector& idf);

// Weights one analyzed sentence against a fixed vocabulary. TfIdf requires
// the IDF computed on the training documents.
SparseVector project(std::span<const std::string> tokens,
                     const Vocabulary& vocab, WeightScheme scheme,
                     const IdfVector* idf = nullptr);

DocTermMatrix count_matrix(std::span<const std::vector<std::string>> docs,
                           const Vocabulary& vocab);
DocTermMatrix build_matrix(std::span<const std::vector<std::string>> docs,
                           const Vocabulary& vocab, WeightScheme scheme,
                           const IdfVector* idf = nullptr);

// Text dump: `n t scheme`, then `row col weight` triples (12 significant
// digits) in row-major, column-ascending order.
void write_matrix(std::ostream& out, const DocTermMatrix& m);
DocTermMatrix read_matrix(std::istream& in);

}  // namespace causex
