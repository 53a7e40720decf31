// Copyright 2026 The causex Authors.
// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <sstream>

#include "causex/error.hpp"
#include "causex/preprocess.hpp"
#include "causex/rng.hpp"
#include "causex/vectorize.hpp"
#include "oracles.hpp"

using namespace causex;
using Dense = std::vector<double>;
using Tokens = std::vector<std::string>;

namespace {

SparseVector sv(Dense d) { return SparseVector::from_dense(d); }

Vocabulary king_vocab() { return Vocabulary::from_terms(test::kKingTerms); }

std::vector<Tokens> king_docs() {
  std::vector<Tokens> docs;
  for (const auto& d : test::kKingDocs) docs.push_back(tokenize(d));
  return docs;
}

}  // namespace

TEST_CASE("term counts of the bag-of-words example") {
  const auto vocab = Vocabulary::from_terms(test::kBowDictionary);
  for (std::size_t d = 0; d < 2; ++d) {
    CHECK(term_counts(tokenize(test::kBowDocs[d]), vocab).to_dense() ==
          test::kBowVectors[d]);
  }
  CHECK(term_counts(Tokens{"zebra", "yak"}, vocab).nnz() == 0);
  CHECK(term_counts(Tokens{"zebra", "yak"}, vocab).dim() == 10);
}

TEST_CASE("boolean weights") {
  const auto vocab = king_vocab();
  const auto d1 = boolean_weights(term_counts(king_docs()[0], vocab)).to_dense();
  CHECK(d1 == Dense{1, 1, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0});
  CHECK(boolean_weights(sv({0, 0})).to_dense() == Dense{0, 0});
  CHECK(boolean_weights(sv({0, 3, 1})).to_dense() == Dense{0, 1, 1});
}

TEST_CASE("term-document matrix of the king collection") {
  const auto m = build_matrix(king_docs(), king_vocab(), WeightScheme::Boolean);
  REQUIRE(m.n_rows() == 6);
  CHECK(m.cols == 15);
  for (std::size_t d = 0; d < 6; ++d) {
    const auto row = m.rows[d].to_dense();
    for (std::size_t j = 0; j < 15; ++j) CHECK(row[j] == test::kKingMatrix[d][j]);
  }
}

TEST_CASE("tf weights") {
  CHECK(tf_weights(sv({1, 2, 1})).to_dense() == Dense{0.25, 0.5, 0.25});
  const auto bow = tf_weights(sv(test::kBowVectors[0])).to_dense();
  for (std::size_t j = 0; j < bow.size(); ++j) {
    CHECK(bow[j] == doctest::Approx(test::kBowVectors[0][j] / 8.0).epsilon(1e-15));
  }
  CHECK(tf_weights(sv({0, 0})).to_dense() == Dense{0, 0});
}

TEST_CASE("tf rows sum to one") {
  Rng rng(1);
  for (int i = 0; i < 200; ++i) {
    Dense d(1 + rng.below(30));
    for (auto& v : d) v = static_cast<double>(rng.below(3) == 0 ? rng.below(9) : 0);
    const auto tf = tf_weights(sv(d));
    if (tf.nnz() == 0) continue;
    CHECK(std::abs(tf.sum() - 1.0) <= 1e-12);
  }
}

TEST_CASE("idf on the king collection") {
  const auto vocab = king_vocab();
  const auto idf = compute_idf(count_matrix(king_docs(), vocab));
  CHECK(idf.n_docs == 6);
  CHECK(idf.values[*vocab.index_of("king")] == 0.0);
  CHECK(idf.values[*vocab.index_of("martin")] == doctest::Approx(std::log(6.0)));
  CHECK(idf.values[*vocab.index_of("martin")] == doctest::Approx(1.7918).epsilon(1e-4));
  CHECK(idf.values[*vocab.index_of("college")] == doctest::Approx(std::log(2.0)));

  const auto one = Vocabulary::from_terms({"x"});
  CHECK(compute_idf(count_matrix(std::vector<Tokens>{{"x"}}, one)).values[0] == 0.0);
}

TEST_CASE("idf is non-increasing in document frequency") {
  Rng rng(9);
  for (int trial = 0; trial < 50; ++trial) {
    const Tokens pool = {"a", "b", "c", "d", "e"};
    std::vector<Tokens> docs(1 + rng.below(12));
    for (auto& d : docs) {
      for (const auto& t : pool) {
        if (rng.below(2)) d.push_back(t);
      }
    }
    const auto vocab = Vocabulary::from_terms(pool);
    const auto counts = count_matrix(docs, vocab);
    const auto idf = compute_idf(counts);
    std::vector<std::size_t> df(pool.size(), 0);
    for (const auto& row : counts.rows) {
      for (const auto& e : row.entries()) ++df[e.col];
    }
    for (std::size_t i = 0; i < pool.size(); ++i) {
      CHECK(idf.values[i] >= 0.0);
      for (std::size_t j = 0; j < pool.size(); ++j) {
        if (df[i] == 0 || df[j] == 0) continue;
        if (df[i] < df[j]) CHECK(idf.values[i] > idf.values[j]);
      }
      if (df[i] == docs.size()) CHECK(idf.values[i] == 0.0);
    }
  }
}

TEST_CASE("tfidf weights") {
  IdfVector idf{{std::log(6.0), 0.0, 1.0}, 6};
  const auto w = tfidf_weights(sv({0.5, 0.5, 0.0}), idf).to_dense();
  CHECK(w[0] == doctest::Approx(0.8959).epsilon(1e-4));
  CHECK(w[1] == 0.0);
  CHECK(w[2] == 0.0);
}

TEST_CASE("projection onto a training vocabulary") {
  const auto vocab = Vocabulary::from_terms({"a", "b"});
  CHECK(project(Tokens{"a", "c", "a"}, vocab, WeightScheme::Tf).to_dense() == Dense{1.0, 0.0});
  CHECK(project(Tokens{"a", "c", "a"}, vocab, WeightScheme::Boolean).to_dense() == Dense{1, 0});
  CHECK(project(Tokens{}, vocab, WeightScheme::Tf).to_dense() == Dense{0, 0});
  CHECK_THROWS_AS(project(Tokens{"a"}, vocab, WeightScheme::TfIdf), Error);
  IdfVector idf{{0.5, 2.0}, 4};
  CHECK(project(Tokens{"a", "b", "b", "b"}, vocab, WeightScheme::TfIdf, &idf).to_dense() ==
        Dense{0.125, 1.5});
}

TEST_CASE("sparse vector operations agree with dense arithmetic") {
  Rng rng(17);
  for (int i = 0; i < 200; ++i) {
    Dense a(8), b(8);
    for (auto& v : a) v = rng.below(3) ? 0.0 : rng.uniform() * 4 - 2;
    for (auto& v : b) v = rng.below(3) ? 0.0 : rng.uniform() * 4 - 2;
    double d = 0, dist = 0, norm = 0;
    for (std::size_t j = 0; j < 8; ++j) {
      d += a[j] * b[j];
      dist += (a[j] - b[j]) * (a[j] - b[j]);
      norm += a[j] * a[j];
    }
    CHECK(dot(sv(a), sv(b)) == doctest::Approx(d).epsilon(1e-12));
    CHECK(squared_distance(sv(a), sv(b)) == doctest::Approx(dist).epsilon(1e-12));
    CHECK(sv(a).squared_norm() == doctest::Approx(norm).epsilon(1e-12));
    CHECK(sv(a).to_dense() == a);
  }
}

TEST_CASE("matrix dump round trip") {
  const auto vocab = king_vocab();
  const auto idf = compute_idf(count_matrix(king_docs(), vocab));
  const auto m = build_matrix(king_docs(), vocab, WeightScheme::TfIdf, &idf);
  std::ostringstream out;
  write_matrix(out, m);
  CHECK(out.str().rfind("6 15 tfidf\n", 0) == 0);
  std::istringstream in("# comment\n" + out.str());
  const auto back = read_matrix(in);
  CHECK(back.n_rows() == 6);
  CHECK(back.cols == 15);
  CHECK(back.scheme == WeightScheme::TfIdf);
  for (std::size_t r = 0; r < 6; ++r) {
    const auto x = m.rows[r].to_dense();
    const auto y = back.rows[r].to_dense();
    for (std::size_t j = 0; j < 15; ++j) CHECK(y[j] == doctest::Approx(x[j]).epsilon(1e-11));
  }
  std::istringstream bad("2 3 tf\n0 5 1.0\n");
  CHECK_THROWS_AS(read_matrix(bad), Error);
}

TEST_CASE("weight scheme names") {
  for (auto s : {WeightScheme::Boolean, WeightScheme::Tf, WeightScheme::TfIdf}) {
    CHECK(parse_weight_scheme(to_string(s)) == s);
  }
  CHECK_FALSE(parse_weight_scheme("bm25").has_value());
}
