// Copyright 2026 The causex Authors.
// SPDX-License-Identifier: Apache-2.0

#include "causex/bayes.hpp"

#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>

#include "causex/error.hpp"
#include "text_util.hpp"

namespace causex {

NbModel train_nb(const DocTermMatrix& matrix, std::span<const Label> labels,
                 double alpha) {
  if (matrix.n_rows() != labels.size()) {
    throw Error(ErrorKind::InvalidArgument,
                "matrix rows and labels differ in length");
  }
  if (!(alpha > 0.0) || !std::isfinite(alpha)) {
    throw Error(ErrorKind::InvalidArgument, "alpha must be a positive real");
  }
  const std::size_t t = matrix.cols;
  if (t == 0) {
    throw Error(ErrorKind::InvalidArgument, "empty vocabulary");
  }
  std::size_t n_class[2] = {0, 0};
  std::vector<double> weight[2] = {std::vector<double>(t, 0.0),
                                   std::vector<double>(t, 0.0)};
  for (std::size_t r = 0; r < labels.size(); ++r) {
    const std::size_t c = labels[r] == Label::Causal ? 0 : 1;
    ++n_class[c];
    for (const auto& e : matrix.rows[r].entries()) weight[c][e.col] += e.value;
  }
  if (n_class[0] == 0 || n_class[1] == 0) {
    throw Error(ErrorKind::InvalidArgument, "degenerate training labels");
  }

  NbModel model;
  model.alpha_ = alpha;
  const double n = static_cast<double>(labels.size());
  for (std::size_t c = 0; c < 2; ++c) {
    model.log_prior_[c] = std::log(static_cast<double>(n_class[c]) / n);
    double total = 0.0;
    for (double w : weight[c]) total += w;
    const double denom = std::log(total + alpha * static_cast<double>(t));
    model.log_likelihood_[c].resize(t);
    for (std::size_t j = 0; j < t; ++j) {
      model.log_likelihood_[c][j] = std::log(weight[c][j] + alpha) - denom;
    }
  }
  return model;
}

ClassScores NbModel::log_posterior(const SparseVector& x) const {
  if (x.dim() != n_terms()) {
    throw Error(ErrorKind::Mismatch,
                "feature vector length does not match the model vocabulary");
  }
  ClassScores s{log_prior_[0], log_prior_[1]};
  for (const auto& e : x.entries()) {
    s.causal += e.value * log_likelihood_[0][e.col];
    s.non_causal += e.value * log_likelihood_[1][e.col];
  }
  return s;
}

Label NbModel::predict(const SparseVector& x) const {
  const ClassScores s = log_posterior(x);
  return s.causal >= s.non_causal ? Label::Causal : Label::NonCausal;
}

void NbModel::write(std::ostream& out) const {
  out << "nb 1 " << detail::format_real(alpha_, 17) << ' ' << n_terms() << ' '
      << detail::format_real(log_prior_[0], 17) << ' '
      << detail::format_real(log_prior_[1], 17) << '\n';
  for (std::size_t c = 0; c < 2; ++c) {
    for (std::size_t j = 0; j < log_likelihood_[c].size(); ++j) {
      if (j > 0) out << ' ';
      out << detail::format_real(log_likelihood_[c][j], 17);
    }
    out << '\n';
  }
}

NbModel NbModel::read(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) {
    throw Error(ErrorKind::Format, "nb model: missing header");
  }
  std::istringstream header(line);
  std::string tag;
  int version = 0;
  std::size_t t = 0;
  NbModel m;
  if (!(header >> tag >> version >> m.alpha_ >> t >> m.log_prior_[0] >>
        m.log_prior_[1]) ||
      tag != "nb" || version != 1) {
    throw Error(ErrorKind::Format, "nb model: malformed header");
  }
  for (std::size_t c = 0; c < 2; ++c) {
    if (!std::getline(in, line)) {
      throw Error(ErrorKind::Format, "nb model: missing likelihood row");
    }
    std::istringstream row(line);
    m.log_likelihood_[c].resize(t);
    for (std::size_t j = 0; j < t; ++j) {
      if (!(row >> m.log_likelihood_[c][j])) {
        throw Error(ErrorKind::Format, "nb model: short likelihood row");
      }
    }
  }
  return m;
}

}  // namespace causex
