// Copyright 2026 The causex Authors.
// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <sstream>

#include "causex/bayes.hpp"
#include "causex/error.hpp"
#include "causex/rng.hpp"
#include "oracles.hpp"

using namespace causex;
using Dense = std::vector<double>;

namespace {

SparseVector sv(Dense d) { return SparseVector::from_dense(d); }

DocTermMatrix matrix(const std::vector<Dense>& rows) {
  DocTermMatrix m;
  m.cols = rows.front().size();
  for (const auto& r : rows) m.rows.push_back(sv(r));
  return m;
}

// vocab {a, b}; the causal row has a twice, the other row b twice.
NbModel toy(double alpha = 1.0) {
  return train_nb(matrix({{2, 0}, {0, 2}}), std::vector<Label>{Label::Causal, Label::NonCausal},
                  alpha);
}

}  // namespace

TEST_CASE("smoothed likelihoods of the toy model") {
  const auto m = toy();
  CHECK(std::exp(m.log_likelihood(Label::Causal, 0)) == doctest::Approx(0.75));
  CHECK(std::exp(m.log_likelihood(Label::NonCausal, 0)) == doctest::Approx(0.25));
  CHECK(m.log_prior(Label::Causal) == doctest::Approx(std::log(0.5)));
  CHECK(m.log_prior(Label::NonCausal) == doctest::Approx(std::log(0.5)));
}

TEST_CASE("posterior scores") {
  const auto m = toy();
  const auto zero = m.log_posterior(sv({0, 0}));
  CHECK(zero.causal == m.log_prior(Label::Causal));
  CHECK(zero.non_causal == m.log_prior(Label::NonCausal));
  const auto a = m.log_posterior(sv({1, 0}));
  CHECK(a.causal - a.non_causal == doctest::Approx(std::log(3.0)));
  const auto aa = m.log_posterior(sv({2, 0}));
  CHECK(aa.causal - aa.non_causal == doctest::Approx(2 * std::log(3.0)));
}

TEST_CASE("predictions and tie-break") {
  const auto m = toy();
  CHECK(predict_nb(m, sv({1, 0})) == Label::Causal);
  CHECK(predict_nb(m, sv({0, 1})) == Label::NonCausal);
  CHECK(predict_nb(m, sv({0, 0})) == Label::Causal);
  CHECK(predict_nb(m, sv({1, 1})) == Label::Causal);
}

TEST_CASE("smoothing dominance") {
  const auto m = toy(1e12);
  CHECK(std::exp(m.log_likelihood(Label::Causal, 0)) == doctest::Approx(0.5));
  CHECK(std::exp(m.log_likelihood(Label::NonCausal, 1)) == doctest::Approx(0.5));
}

TEST_CASE("model probabilities are normalized") {
  Rng rng(8);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t t = 1 + rng.below(20);
    std::vector<Dense> rows;
    std::vector<Label> labels;
    for (std::size_t d = 0; d < 2 + rng.below(10); ++d) {
      Dense r(t);
      for (auto& v : r) v = rng.below(2) ? rng.uniform() : 0.0;
      rows.push_back(r);
      labels.push_back(d % 2 ? Label::Causal : Label::NonCausal);
    }
    const auto m = train_nb(matrix(rows), labels, 0.5 + rng.uniform());
    for (auto c : {Label::Causal, Label::NonCausal}) {
      double s = 0;
      for (std::size_t j = 0; j < t; ++j) s += std::exp(m.log_likelihood(c, j));
      CHECK(std::abs(s - 1.0) <= 1e-9);
    }
    CHECK(std::abs(std::exp(m.log_prior(Label::Causal)) +
                   std::exp(m.log_prior(Label::NonCausal)) - 1.0) <= 1e-12);
  }
}

TEST_CASE("score additivity and scale invariance") {
  Rng rng(10);
  const auto m = train_nb(matrix({{3, 0, 1}, {0, 2, 1}, {1, 1, 0}}),
                          std::vector<Label>{Label::Causal, Label::NonCausal, Label::NonCausal});
  for (int i = 0; i < 100; ++i) {
    Dense x = {double(rng.below(5)), double(rng.below(5)), double(rng.below(5))};
    const auto base = m.log_posterior(sv(x));
    for (std::size_t j = 0; j < 3; ++j) {
      Dense y = x;
      y[j] += 1;
      const auto s = m.log_posterior(sv(y));
      CHECK(s.causal - base.causal ==
            doctest::Approx(m.log_likelihood(Label::Causal, j)));
      CHECK(s.non_causal - base.non_causal ==
            doctest::Approx(m.log_likelihood(Label::NonCausal, j)));
    }
    const double k = 0.25 + 3 * rng.uniform();
    Dense scaled = x;
    for (auto& v : scaled) v *= k;
    const auto a = m.log_posterior(sv(x));
    const auto b = m.log_posterior(sv(scaled));
    const double da = a.causal - a.non_causal;
    const double db = b.causal - b.non_causal;
    if (std::abs(da) > 1e-9 && std::abs(db) > 1e-9) {
      // Priors are not scaled, so compare the likelihood part only.
      const double pa = da - (m.log_prior(Label::Causal) - m.log_prior(Label::NonCausal));
      const double pb = db - (m.log_prior(Label::Causal) - m.log_prior(Label::NonCausal));
      CHECK(pb == doctest::Approx(k * pa));
    }
  }
}

TEST_CASE("agreement with the full posterior") {
  Rng rng(77);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t t = 1 + rng.below(3);
    std::vector<Dense> rows;
    std::vector<Label> labels;
    for (std::size_t d = 0; d < 3 + rng.below(5); ++d) {
      Dense r(t);
      for (auto& v : r) v = double(rng.below(4));
      rows.push_back(r);
      labels.push_back(d == 0 ? Label::Causal : d == 1 ? Label::NonCausal
                               : (rng.below(2) ? Label::Causal : Label::NonCausal));
    }
    const double alpha = 1.0;
    const auto m = train_nb(matrix(rows), labels, alpha);
    const auto ref = test::ref_nb_train(rows, labels, alpha);
    for (int a = 0; a <= 4; ++a) {
      for (int b = 0; b <= (t > 1 ? 4 - a : 0); ++b) {
        for (int c = 0; c <= (t > 2 ? 4 - a - b : 0); ++c) {
          std::vector<int> x = {a, b, c};
          x.resize(t);
          const double post = test::ref_nb_posterior(ref, x);
          if (std::abs(post - 0.5) < 1e-12) continue;
          Dense xd(x.begin(), x.end());
          CHECK(predict_nb(m, sv(xd)) == (post > 0.5 ? Label::Causal : Label::NonCausal));
        }
      }
    }
  }
}

TEST_CASE("training errors") {
  CHECK_THROWS_AS(train_nb(matrix({{1, 0}, {0, 1}}),
                           std::vector<Label>{Label::Causal, Label::Causal}),
                  Error);
  try {
    train_nb(matrix({{1, 0}}), std::vector<Label>{Label::NonCausal});
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("degenerate training labels") != std::string::npos);
  }
  CHECK_THROWS_AS(train_nb(matrix({{1, 0}, {0, 1}}), std::vector<Label>{Label::Causal}),
                  Error);
  CHECK_THROWS_AS(train_nb(matrix({{1, 0}, {0, 1}}),
                           std::vector<Label>{Label::Causal, Label::NonCausal}, 0.0),
                  Error);
}

TEST_CASE("serialization round trip is exact") {
  const auto m = train_nb(matrix({{0.1, 0.7, 0.2}, {0.3, 0.3, 0.4}, {0.9, 0.0, 0.1}}),
                          std::vector<Label>{Label::Causal, Label::NonCausal, Label::Causal},
                          0.37);
  std::ostringstream out;
  m.write(out);
  CHECK(out.str().rfind("nb 1 ", 0) == 0);
  std::istringstream in(out.str());
  const auto back = NbModel::read(in);
  CHECK(back.alpha() == m.alpha());
  CHECK(back.n_terms() == 3);
  for (auto c : {Label::Causal, Label::NonCausal}) {
    CHECK(back.log_prior(c) == m.log_prior(c));
    for (std::size_t j = 0; j < 3; ++j) {
      CHECK(back.log_likelihood(c, j) == m.log_likelihood(c, j));
    }
  }
  std::istringstream bad("nb 1 1 3 x y\n");
  CHECK_THROWS_AS(NbModel::read(bad), Error);
}
