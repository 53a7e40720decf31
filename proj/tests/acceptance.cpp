// Copyright 2026 The causex Authors.
// SPDX-License-Identifier: Apache-2.0

// Acceptance suite: one PASS/FAIL line per criterion.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "causex/bayes.hpp"
#include "causex/connectives.hpp"
#include "causex/corpus.hpp"
#include "causex/eval.hpp"
#include "causex/preprocess.hpp"
#include "causex/rng.hpp"
#include "causex/svm.hpp"
#include "causex/vectorize.hpp"
#include "oracles.hpp"

namespace {

using namespace causex;
namespace t = causex::test;

struct Check {
  bool ok = true;
  std::string detail;

  void expect(bool cond, const std::string& what) {
    if (!cond && ok) detail = what;
    ok = ok && cond;
  }
};

SparseVector dense(std::initializer_list<double> v) {
  std::vector<double> d(v);
  return SparseVector::from_dense(d);
}

Check bow_fidelity() {
  Check c;
  const auto vocab = Vocabulary::from_terms(t::kBowDictionary);
  for (std::size_t d = 0; d < 2; ++d) {
    const auto tokens = tokenize(t::kBowDocs[d]);
    const auto v = term_counts(tokens, vocab).to_dense();
    c.expect(v == t::kBowVectors[d], "document " + std::to_string(d + 1));
  }
  return c;
}

Check vsm_fidelity() {
  Check c;
  const auto vocab = Vocabulary::from_terms(t::kKingTerms);
  for (std::size_t d = 0; d < 6; ++d) {
    const auto row =
        boolean_weights(term_counts(tokenize(t::kKingDocs[d]), vocab)).to_dense();
    for (std::size_t j = 0; j < 15; ++j) {
      c.expect(row[j] == t::kKingMatrix[d][j],
               "D" + std::to_string(d + 1) + " T" + std::to_string(j + 1));
    }
  }
  return c;
}

Check stemmer() {
  Check c;
  std::string out;
  for (const auto& tok : tokenize("stemming can be fun and exciting",
                                  TokenizeMode::Whitespace)) {
    if (!out.empty()) out += ' ';
    out += porter_stem(tok);
  }
  c.expect(out == "stem can be fun and excit", "listing gave '" + out + "'");
  std::ifstream in(t::source_path("tests/data/porter_vectors.tsv"));
  c.expect(static_cast<bool>(in), "cannot open porter_vectors.tsv");
  std::string line;
  std::size_t n = 0;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    const auto tab = line.find('\t');
    const std::string word = line.substr(0, tab);
    const std::string stem = line.substr(tab + 1);
    c.expect(porter_stem(word) == stem,
             word + " -> " + porter_stem(word) + ", expected " + stem);
    ++n;
  }
  c.expect(n >= 100, "fewer than 100 test vectors");
  return c;
}

Check svm_analytic() {
  Check c;
  const std::vector<SparseVector> x = {dense({0, 0}), dense({2, 2})};
  const std::vector<Label> y = {Label::NonCausal, Label::Causal};
  SvmOptions opt;
  opt.C = 1000;
  const auto m = train_svm(x, y, Kernel::linear(), opt);
  const auto w = m.primal_weights();
  c.expect(std::abs(w[0] - 0.5) <= 1e-6 && std::abs(w[1] - 0.5) <= 1e-6, "w");
  c.expect(std::abs(m.bias() + 1.0) <= 1e-6, "b");
  const double margin = 1.0 / std::sqrt(w[0] * w[0] + w[1] * w[1]);
  c.expect(std::abs(margin - std::sqrt(2.0)) <= 1e-8, "margin");
  return c;
}

Check svm_dual_oracle() {
  Check c;
  Rng rng(20160601);
  const Kernel kernels[] = {Kernel::linear(), Kernel::gaussian(1.5),
                            Kernel::polynomial(1.0, 2)};
  const t::KernelFn ref[] = {t::ref_linear, t::ref_gaussian(1.5),
                             t::ref_polynomial(1.0, 2)};
  const double Cs[] = {0.5, 1.0, 10.0};
  for (int inst = 0; inst < 20; ++inst) {
    for (int k = 0; k < 3; ++k) {
      const std::size_t n = 2 + rng.below(5);
      std::vector<t::Point> pts;
      std::vector<SparseVector> rows;
      std::vector<int> yi;
      std::vector<Label> y;
      for (std::size_t i = 0; i < n; ++i) {
        t::Point p = {rng.uniform() * 4 - 2, rng.uniform() * 4 - 2};
        rows.push_back(SparseVector::from_dense(p));
        pts.push_back(p);
        const int lab = i == 0 ? 1 : i == 1 ? -1 : (rng.below(2) ? 1 : -1);
        yi.push_back(lab);
        y.push_back(lab > 0 ? Label::Causal : Label::NonCausal);
      }
      SvmOptions opt;
      opt.C = Cs[rng.below(3)];
      SvmTrainStats stats;
      train_svm(rows, y, kernels[k], opt, &stats);
      const auto q = t::signed_gram(pts, yi, ref[k]);
      Eigen::VectorXd a(static_cast<Eigen::Index>(n));
      double eq = 0;
      for (std::size_t i = 0; i < n; ++i) {
        a(static_cast<Eigen::Index>(i)) = stats.alphas[i];
        eq += stats.alphas[i] * yi[i];
      }
      const auto best = t::brute_force_dual(q, yi, opt.C);
      const double got = t::ref_dual_objective(q, a);
      const std::string tag = "instance " + std::to_string(inst) + " kernel " +
                              kernels[k].describe();
      c.expect(std::abs(got - best.objective) <=
                   1e-4 * std::max(1.0, std::abs(best.objective)),
               tag + ": objective " + std::to_string(got) + " vs " +
                   std::to_string(best.objective));
      c.expect(t::kkt_violation(q, yi, a, opt.C) <= opt.tol, tag + ": KKT");
      c.expect(std::abs(eq) <= 1e-8, tag + ": equality constraint");
    }
  }
  return c;
}

Check kernel_trick() {
  Check c;
  const std::vector<SparseVector> x = {dense({0, 0}), dense({1, 1}),
                                       dense({0, 1}), dense({1, 0})};
  const std::vector<Label> y = {Label::NonCausal, Label::NonCausal,
                                Label::Causal, Label::Causal};
  SvmOptions opt;
  opt.C = 1000;
  auto errors = [&](const SvmModel& m) {
    int e = 0;
    for (std::size_t i = 0; i < x.size(); ++i) e += m.predict(x[i]) != y[i];
    return e;
  };
  c.expect(errors(train_svm(x, y, Kernel::linear(), opt)) > 0,
           "linear kernel fit XOR");
  c.expect(errors(train_svm(x, y, Kernel::gaussian(1.0), opt)) == 0,
           "gaussian kernel misclassified XOR");
  return c;
}

Check nb_oracle() {
  Check c;
  Rng rng(42);
  for (int model = 0; model < 50; ++model) {
    const std::size_t t_terms = 1 + rng.below(3);
    const std::size_t n_docs = 2 + rng.below(6);
    const double alpha = (1 + rng.below(4)) * 0.5;
    std::vector<std::vector<double>> rows;
    std::vector<Label> labels;
    DocTermMatrix m;
    m.cols = t_terms;
    for (std::size_t d = 0; d < n_docs; ++d) {
      std::vector<double> r(t_terms);
      for (auto& v : r) v = static_cast<double>(rng.below(4));
      rows.push_back(r);
      m.rows.push_back(SparseVector::from_dense(r));
      labels.push_back(d == 0 ? Label::Causal
                       : d == 1 ? Label::NonCausal
                                : (rng.below(2) ? Label::Causal : Label::NonCausal));
    }
    const NbModel nb = train_nb(m, labels, alpha);
    const auto ref = t::ref_nb_train(rows, labels, alpha);
    // Every count vector with total <= 4.
    std::vector<int> x(t_terms, 0);
    std::function<void(std::size_t, int)> walk = [&](std::size_t j, int left) {
      if (j == t_terms) {
        std::vector<double> xd(x.begin(), x.end());
        const double post = t::ref_nb_posterior(ref, x);
        const Label want = post >= 0.5 ? Label::Causal : Label::NonCausal;
        if (std::abs(post - 0.5) > 1e-12) {
          c.expect(predict_nb(nb, SparseVector::from_dense(xd)) == want,
                   "model " + std::to_string(model) + " disagrees");
        }
        return;
      }
      for (int v = 0; v <= left; ++v) {
        x[j] = v;
        walk(j + 1, left - v);
      }
      x[j] = 0;
    };
    walk(0, 4);
  }
  return c;
}

Check metric_identities() {
  Check c;
  Rng rng(7);
  for (int i = 0; i < 1000; ++i) {
    ConfusionMatrix cm{rng.below(200), rng.below(200), rng.below(200),
                       rng.below(200)};
    const auto m = metrics(cm);
    if (m.accuracy) c.expect(*m.accuracy + *m.error_rate == 1.0, "ACC+ERR");
    if (m.specificity) c.expect(*m.fpr == 1.0 - *m.specificity, "FPR");
    if (m.recall) c.expect(*m.fnr == 1.0 - *m.recall, "FNR");
    const double n = static_cast<double>(cm.total());
    if (n > 0) {
      c.expect(std::abs(*m.accuracy - (cm.tp + cm.tn) / n) <= 1e-15, "ACC");
    }
    if (cm.fp + cm.tn > 0) {
      c.expect(std::abs(*m.fpr - double(cm.fp) / double(cm.fp + cm.tn)) <= 1e-15,
               "FPR value");
    }
  }
  const auto m = metrics({45, 5, 40, 10});
  c.expect(m.f_measure && std::abs(*m.f_measure - 0.8571) <= 1e-4, "F(45,5,40,10)");
  return c;
}

FoldResult fold(std::size_t tp, std::size_t fp, std::size_t tn, std::size_t fn) {
  FoldResult r;
  r.cm = {tp, fp, tn, fn};
  r.metrics = metrics(r.cm);
  return r;
}

Check unbiased_f() {
  Check c;
  Rng rng(99);
  for (int i = 0; i < 1000; ++i) {
    std::vector<FoldResult> folds;
    double tp = 0, fp = 0, fn = 0;
    const std::size_t k = 2 + rng.below(9);
    for (std::size_t f = 0; f < k; ++f) {
      folds.push_back(fold(rng.below(30), rng.below(30), rng.below(30),
                           rng.below(30)));
      tp += folds.back().cm.tp;
      fp += folds.back().cm.fp;
      fn += folds.back().cm.fn;
    }
    const auto comb = combine_f(folds);
    if (tp + fp + fn > 0) {
      c.expect(comb.f_tp_fp && *comb.f_tp_fp == 2 * tp / (2 * tp + fp + fn),
               "pooled F");
    }
  }
  const std::vector<FoldResult> pair = {fold(3, 1, 0, 1), fold(1, 3, 0, 3)};
  const auto comb = combine_f(pair);
  c.expect(comb.f_tp_fp && *comb.f_tp_fp == 0.5, "(3,1,1)/(1,3,3)");
  return c;
}

Check connectives_fidelity() {
  Check c;
  const auto& lex = ConnectiveLexicon::builtin();
  for (std::size_t i = 0; i < t::kCausalExamples.size(); ++i) {
    const auto& ex = t::kCausalExamples[i];
    const auto doc = make_document("cause" + std::to_string(i + 1), ex.text);
    const auto found = extract_causal(doc, lex);
    const std::string tag = "cause " + std::to_string(i + 1);
    c.expect(found.size() == 1, tag + ": expected one causal sentence");
    if (found.size() == 1) {
      c.expect(found[0].connective == ex.connective, tag + ": connective");
      c.expect(to_string(found[0].category) == ex.category, tag + ": category");
    }
  }
  double sp = 0, sr = 0, sf = 0;
  for (std::size_t r = 0; r < t::kExpertOne.size(); ++r) {
    const auto& row = t::kExpertOne[r];
    std::set<SentenceId> e, a;
    const std::string doc = "report" + std::to_string(r + 1);
    // The shared sentences come first in both sets.
    for (std::size_t i = 0; i < row.e; ++i) e.insert({doc, i});
    for (std::size_t i = 0; i < row.both; ++i) a.insert({doc, i});
    for (std::size_t i = row.both; i < row.a; ++i) a.insert({doc, 1000 + i});
    const auto res = ir_eval(e, a);
    const std::string tag = "report " + std::to_string(r + 1);
    c.expect(res.overlap == row.both, tag + ": overlap");
    c.expect(t::round2(*res.precision) == row.p, tag + ": precision");
    c.expect(t::round2(*res.recall) == row.r, tag + ": recall");
    c.expect(t::round2(*res.f) == row.f, tag + ": F");
    sp += *res.precision;
    sr += *res.recall;
    sf += *res.f;
  }
  c.expect(t::round2(sp / 4) == t::kExpertOneMeanP, "mean precision");
  c.expect(t::round2(sr / 4) == t::kExpertOneMeanR, "mean recall");
  c.expect(t::round2(sf / 4) == t::kExpertOneMeanF, "mean F");
  return c;
}

Check end_to_end() {
  Check c;
  const auto ds =
      load_labeled_dataset(t::source_path("data/synthetic/corpus.tsv"));
  c.expect(ds.size() == 200, "corpus size");
  const ClassifierKind kinds[] = {ClassifierKind::NaiveBayes,
                                  ClassifierKind::SvmLinear,
                                  ClassifierKind::SvmGaussian};
  for (auto kind : kinds) {
    ClassifierSpec spec;
    spec.kind = kind;
    spec.scheme = WeightScheme::Tf;
    const auto folds = cross_validate(ds, spec, 10, 0);
    const auto f = combine_f(folds).f_tp_fp;
    char buf[96];
    std::snprintf(buf, sizeof buf, "%s: F = %.4f",
                  std::string(to_string(kind)).c_str(), f.value_or(-1));
    c.expect(f && *f >= 0.9, buf);
    c.detail = c.ok ? c.detail + (c.detail.empty() ? "" : ", ") + buf : c.detail;
  }
  std::vector<Label> predicted;
  for (const auto& item : ds.items()) {
    predicted.push_back(match_sentence(item.sentence, ConnectiveLexicon::builtin())
                            ? Label::Causal
                            : Label::NonCausal);
  }
  const auto m = metrics(confusion(predicted, ds.labels()));
  c.expect(m.f_measure && *m.f_measure == 1.0, "connectives F != 1");
  return c;
}

Check tfidf_nulling() {
  Check c;
  Rng rng(5);
  const std::vector<std::string> pool = {"engin", "fire", "crew", "deck",
                                         "alarm", "hull", "pump", "fog"};
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<std::vector<std::string>> docs(2 + rng.below(8));
    for (auto& d : docs) {
      d.push_back("vessel");
      const std::size_t len = rng.below(6);
      for (std::size_t i = 0; i < len; ++i) d.push_back(pool[rng.below(pool.size())]);
    }
    std::vector<std::string> terms = pool;
    terms.push_back("vessel");
    const auto vocab = Vocabulary::from_terms(terms);
    const auto idf = compute_idf(count_matrix(docs, vocab));
    const auto m = build_matrix(docs, vocab, WeightScheme::TfIdf, &idf);
    const std::size_t col = *vocab.index_of("vessel");
    for (std::size_t j = 0; j < vocab.size(); ++j) {
      bool everywhere = true;
      for (const auto& d : docs) {
        everywhere = everywhere && std::count(d.begin(), d.end(), terms[j]) > 0;
      }
      if (!everywhere) continue;
      for (const auto& row : m.rows) c.expect(row.to_dense()[j] == 0.0, terms[j]);
    }
    c.expect(idf.values[col] == 0.0, "idf of common term");
  }
  return c;
}

struct Criterion {
  int id;
  const char* name;
  double budget_ms;
  std::function<Check()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "BoW fidelity", 1, bow_fidelity},
      {2, "VSM term-document matrix fidelity", 1, vsm_fidelity},
      {3, "Porter stemmer listing and test vectors", 100, stemmer},
      {4, "SVM analytic two-point oracle", 10, svm_analytic},
      {5, "SVM dual brute-force oracle", 5000, svm_dual_oracle},
      {6, "Kernel trick on XOR", 100, kernel_trick},
      {7, "Naive Bayes posterior enumeration", 1000, nb_oracle},
      {8, "Metric identities", 100, metric_identities},
      {9, "Unbiased F equals pooled F", 100, unbiased_f},
      {10, "Connectives examples and expert-1 IR table", 10, connectives_fidelity},
      {11, "End-to-end synthetic corpus", 30000, end_to_end},
      {12, "TFIDF common-term nulling", 10, tfidf_nulling},
  };
  int failed = 0;
  for (const auto& cr : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Check result;
    try {
      result = cr.run();
    } catch (const std::exception& e) {
      result.ok = false;
      result.detail = std::string("exception: ") + e.what();
    }
    const double ms = std::chrono::duration<double, std::milli>(
                          std::chrono::steady_clock::now() - start)
                          .count();
    if (result.ok && ms > cr.budget_ms) {
      result.ok = false;
      char buf[64];
      std::snprintf(buf, sizeof buf, "over budget of %.0f ms", cr.budget_ms);
      result.detail = buf;
    }
    failed += !result.ok;
    std::printf("%s  %2d  %-44s %9.3f ms%s%s\n", result.ok ? "PASS" : "FAIL",
                cr.id, cr.name, ms, result.detail.empty() ? "" : "  ",
                result.detail.c_str());
  }
  std::printf("%zu/%zu criteria passed\n", criteria.size() - failed,
              criteria.size());
  return failed == 0 ? 0 : 1;
}
