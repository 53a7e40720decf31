// Copyright 2026 The causex Authors.
// SPDX-License-Identifier: Apache-2.0

#include "causex/vectorize.hpp"

#include <cmath>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>

#include "causex/error.hpp"
#include "text_util.hpp"

namespace causex {

std::string_view to_string(WeightScheme s) {
  switch (s) {
    case WeightScheme::Boolean:
      return "boolean";
    case WeightScheme::Tf:
      return "tf";
    case WeightScheme::TfIdf:
      return "tfidf";
  }
  return "unknown";
}

std::optional<WeightScheme> parse_weight_scheme(std::string_view s) {
  if (s == "boolean") return WeightScheme::Boolean;
  if (s == "tf") return WeightScheme::Tf;
  if (s == "tfidf") return WeightScheme::TfIdf;
  return std::nullopt;
}

SparseVector SparseVector::from_dense(std::span<const double> dense) {
  SparseVector v(dense.size());
  for (std::size_t i = 0; i < dense.size(); ++i) {
    v.push(static_cast<std::uint32_t>(i), dense[i]);
  }
  return v;
}

void SparseVector::push(std::uint32_t col, double value) {
  if (col >= dim_ || (!entries_.empty() && entries_.back().col >= col)) {
    throw Error(ErrorKind::InvalidArgument,
                "sparse entries must be in range and strictly increasing");
  }
  if (value != 0.0) entries_.push_back({col, value});
}

double SparseVector::sum() const {
  double s = 0.0;
  for (const auto& e : entries_) s += e.value;
  return s;
}

double SparseVector::squared_norm() const {
  double s = 0.0;
  for (const auto& e : entries_) s += e.value * e.value;
  return s;
}

std::vector<double> SparseVector::to_dense() const {
  std::vector<double> out(dim_, 0.0);
  for (const auto& e : entries_) out[e.col] = e.value;
  return out;
}

double dot(const SparseVector& a, const SparseVector& b) {
  const auto& ea = a.entries();
  const auto& eb = b.entries();
  std::size_t i = 0;
  std::size_t j = 0;
  double s = 0.0;
  while (i < ea.size() && j < eb.size()) {
    if (ea[i].col == eb[j].col) {
      s += ea[i++].value * eb[j++].value;
    } else if (ea[i].col < eb[j].col) {
      ++i;
    } else {
      ++j;
    }
  }
  return s;
}

double squared_distance(const SparseVector& a, const SparseVector& b) {
  const auto& ea = a.entries();
  const auto& eb = b.entries();
  std::size_t i = 0;
  std::size_t j = 0;
  double s = 0.0;
  while (i < ea.size() || j < eb.size()) {
    double d;
    if (j == eb.size() || (i < ea.size() && ea[i].col < eb[j].col)) {
      d = ea[i++].value;
    } else if (i == ea.size() || eb[j].col < ea[i].col) {
      d = eb[j++].value;
    } else {
      d = ea[i++].value - eb[j++].value;
    }
    s += d * d;
  }
  return s;
}

SparseVector term_counts(std::span<const std::string> tokens,
                         const Vocabulary& vocab) {
  std::map<std::uint32_t, double> counts;
  for (const auto& t : tokens) {
    if (auto col = vocab.index_of(t)) {
      counts[static_cast<std::uint32_t>(*col)] += 1.0;
    }
  }
  SparseVector v(vocab.size());
  for (const auto& [col, n] : counts) v.push(col, n);
  return v;
}

SparseVector boolean_weights(const SparseVector& counts) {
  SparseVector v(counts.dim());
  for (const auto& e : counts.entries()) {
    v.push(e.col, e.value > 0.0 ? 1.0 : 0.0);
  }
  return v;
}

SparseVector tf_weights(const SparseVector& counts) {
  SparseVector v(counts.dim());
  const double total = counts.sum();
  if (total == 0.0) return v;
  for (const auto& e : counts.entries()) v.push(e.col, e.value / total);
  return v;
}

IdfVector compute_idf(const DocTermMatrix& counts) {
  if (counts.rows.empty()) {
    throw Error(ErrorKind::InvalidArgument, "idf needs at least one document");
  }
  std::vector<std::size_t> df(counts.cols, 0);
  for (const auto& row : counts.rows) {
    for (const auto& e : row.entries()) {
      if (e.value > 0.0) ++df[e.col];
    }
  }
  IdfVector idf;
  idf.n_docs = counts.rows.size();
  idf.values.resize(counts.cols, 0.0);
  const double n = static_cast<double>(idf.n_docs);
  for (std::size_t j = 0; j < counts.cols; ++j) {
    if (df[j] == idf.n_docs) {
      idf.values[j] = 0.0;
    } else if (df[j] > 0) {
      idf.values[j] = std::log(n / static_cast<double>(df[j]));
    }
  }
  return idf;
}

SparseVector tfidf_weights(const SparseVector& tf, const IdfVector& idf) {
  if (idf.values.size() != tf.dim()) {
    throw Error(ErrorKind::Mismatch, "idf and tf vectors differ in length");
  }
  SparseVector v(tf.dim());
  for (const auto& e : tf.entries()) v.push(e.col, e.value * idf.values[e.col]);
  return v;
}

SparseVector project(std::span<const std::string> tokens,
                     const Vocabulary& vocab, WeightScheme scheme,
                     const IdfVector* idf) {
  SparseVector counts = term_counts(tokens, vocab);
  switch (scheme) {
    case WeightScheme::Boolean:
      return boolean_weights(counts);
    case WeightScheme::Tf:
      return tf_weights(counts);
    case WeightScheme::TfIdf:
      if (idf == nullptr) {
        throw Error(ErrorKind::InvalidArgument,
                    "tfidf projection requires the training idf vector");
      }
      return tfidf_weights(tf_weights(counts), *idf);
  }
  return counts;
}

DocTermMatrix count_matrix(std::span<const std::vector<std::string>> docs,
                           const Vocabulary& vocab) {
  DocTermMatrix m;
  m.cols = vocab.size();
  m.vocab_fingerprint = vocab.fingerprint();
  m.rows.reserve(docs.size());
  for (const auto& d : docs) m.rows.push_back(term_counts(d, vocab));
  return m;
}

DocTermMatrix build_matrix(std::span<const std::vector<std::string>> docs,
                           const Vocabulary& vocab, WeightScheme scheme,
                           const IdfVector* idf) {
  DocTermMatrix m;
  m.cols = vocab.size();
  m.scheme = scheme;
  m.vocab_fingerprint = vocab.fingerprint();
  m.rows.reserve(docs.size());
  for (const auto& d : docs) m.rows.push_back(project(d, vocab, scheme, idf));
  return m;
}

void write_matrix(std::ostream& out, const DocTermMatrix& m) {
  out << m.n_rows() << ' ' << m.cols << ' ' << to_string(m.scheme) << '\n';
  for (std::size_t r = 0; r < m.rows.size(); ++r) {
    for (const auto& e : m.rows[r].entries()) {
      out << r << ' ' << e.col << ' ' << detail::format_real(e.value, 12)
          << '\n';
    }
  }
}

DocTermMatrix read_matrix(std::istream& in) {
  std::string line;
  auto next_data_line = [&]() -> bool {
    while (std::getline(in, line)) {
      if (!line.empty() && line.front() != '#') return true;
    }
    return false;
  };
  if (!next_data_line()) {
    throw Error(ErrorKind::Format, "matrix: missing header");
  }
  std::istringstream header(line);
  std::size_t n = 0;
  DocTermMatrix m;
  std::string scheme;
  if (!(header >> n >> m.cols >> scheme)) {
    throw Error(ErrorKind::Format, "matrix: malformed header '" + line + "'");
  }
  auto parsed = parse_weight_scheme(scheme);
  if (!parsed) throw Error(ErrorKind::Format, "matrix: unknown scheme");
  m.scheme = *parsed;
  m.rows.assign(n, SparseVector(m.cols));
  while (next_data_line()) {
    std::istringstream row(line);
    std::size_t r = 0;
    std::uint32_t c = 0;
    double w = 0.0;
    if (!(row >> r >> c >> w) || r >= n) {
      throw Error(ErrorKind::Format, "matrix: malformed entry '" + line + "'");
    }
    try {
      m.rows[r].push(c, w);
    } catch (const Error&) {
      throw Error(ErrorKind::Format, "matrix: entry out of order '" + line + "'");
    }
  }
  return m;
}

}  // namespace causex
