// Copyright 2026 The causex Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <iosfwd>
#include <span>
#include <vector>

#include "causex/corpus.hpp"
#include "causex/vectorize.hpp"

namespace causex {

struct ClassScores {
  double causal = 0.0;
  double non_causal = 0.0;
};

// Multinomial naive Bayes over bag-of-words weights. Fractional (tf, tfidf)
// weights act as soft counts.
class NbModel {
 public:
  NbModel() = default;

  double alpha() const { return alpha_; }
  std::size_t n_terms() const { return log_likelihood_[0].size(); }
  double log_prior(Label c) const { return log_prior_[slot(c)]; }
  double log_likelihood(Label c, std::size_t term) const {
    return log_likelihood_[slot(c)].at(term);
  }

  // Unnormalized log posterior: log P(y) + sum_j x_j log P(term_j | y).
  ClassScores log_posterior(const SparseVector& x) const;
  // Ties go to Causal.
  Label predict(const SparseVector& x) const;

  void write(std::ostream& out) const;
  static NbModel read(std::istream& in);

  friend NbModel train_nb(const DocTermMatrix& matrix,
                          std::span<const Label> labels, double alpha);

 private:
  static std::size_t slot(Label c) { return c == Label::Causal ? 0 : 1; }

  double alpha_ = 1.0;
  double log_prior_[2] = {0.0, 0.0};
  std::vector<double> log_likelihood_[2];
};

// log P(y=c) = ln(n_c / n);
// log P(term j | c) = ln((W_cj + alpha) / (W_c + alpha * t)).
NbModel train_nb(const DocTermMatrix& matrix, std::span<const Label> labels,
                 double alpha = 1.0);

inline Label predict_nb(const NbModel& model, const SparseVector& x) {
  return model.predict(x);
}

}  // namespace causex
