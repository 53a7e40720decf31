// Copyright 2026 The causex Authors.
// SPDX-License-Identifier: Apache-2.0

#include "causex/eval.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <exception>
#include <mutex>
#include <ostream>
#include <sstream>
#include <thread>

#include "causex/error.hpp"
#include "causex/rng.hpp"
#include "text_util.hpp"

namespace causex {
namespace {

std::optional<double> ratio(double num, double den) {
  if (den == 0.0) return std::nullopt;
  return num / den;
}

std::optional<double> harmonic(std::optional<double> p,
                               std::optional<double> r) {
  if (!p || !r || *p + *r == 0.0) return std::nullopt;
  return 2.0 * *p * *r / (*p + *r);
}

std::string fmt(std::optional<double> v) {
  if (!v) return "NA";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4f", *v);
  return buf;
}

// Runs body(i) for i in [0, n) on up to `jobs` threads. Results must be
// written by index; the lowest-index exception is rethrown.
template <typename Body>
void parallel_for(std::size_t n, std::size_t jobs, Body body) {
  std::vector<std::exception_ptr> errors(n);
  if (jobs <= 1 || n <= 1) {
    for (std::size_t i = 0; i < n; ++i) {
      try {
        body(i);
      } catch (...) {
        errors[i] = std::current_exception();
        break;
      }
    }
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> workers;
    for (std::size_t w = 0; w < std::min(jobs, n); ++w) {
      workers.emplace_back([&] {
        for (std::size_t i = next++; i < n; i = next++) {
          try {
            body(i);
          } catch (...) {
            errors[i] = std::current_exception();
          }
        }
      });
    }
    for (auto& t : workers) t.join();
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

}  // namespace

ConfusionMatrix confusion(std::span<const Label> predicted,
                          std::span<const Label> truth) {
  if (predicted.size() != truth.size()) {
    throw Error(ErrorKind::InvalidArgument,
                "predictions and ground truth differ in length");
  }
  ConfusionMatrix cm;
  for (std::size_t i = 0; i < truth.size(); ++i) {
    const bool pred_pos = predicted[i] == Label::Causal;
    const bool true_pos = truth[i] == Label::Causal;
    if (pred_pos && true_pos) {
      ++cm.tp;
    } else if (pred_pos) {
      ++cm.fp;
    } else if (true_pos) {
      ++cm.fn;
    } else {
      ++cm.tn;
    }
  }
  return cm;
}

MetricSet metrics(const ConfusionMatrix& cm) {
  const auto tp = static_cast<double>(cm.tp);
  const auto fp = static_cast<double>(cm.fp);
  const auto tn = static_cast<double>(cm.tn);
  const auto fn = static_cast<double>(cm.fn);
  MetricSet m;
  m.accuracy = ratio(tp + tn, tp + tn + fp + fn);
  if (m.accuracy) m.error_rate = 1.0 - *m.accuracy;
  m.recall = ratio(tp, tp + fn);
  m.precision = ratio(tp, tp + fp);
  m.specificity = ratio(tn, fp + tn);
  if (m.specificity) m.fpr = 1.0 - *m.specificity;
  if (m.recall) m.fnr = 1.0 - *m.recall;
  if (cm.tp == 0 && cm.fp + cm.fn > 0) {
    m.f_measure = 0.0;
  } else {
    m.f_measure = harmonic(m.precision, m.recall);
  }
  return m;
}

std::vector<std::vector<std::size_t>> kfold_split(
    std::size_t n, std::size_t k, std::uint64_t seed,
    std::span<const Label> labels) {
  if (k < 2) throw Error(ErrorKind::InvalidArgument, "k must be at least 2");
  if (k > n) {
    throw Error(ErrorKind::InvalidArgument,
                "k = " + std::to_string(k) + " exceeds the " +
                    std::to_string(n) + " available items");
  }
  if (!labels.empty() && labels.size() != n) {
    throw Error(ErrorKind::InvalidArgument, "labels must cover every item");
  }
  Rng rng(seed);
  std::vector<std::vector<std::size_t>> groups;
  if (labels.empty()) {
    groups.resize(1);
    for (std::size_t i = 0; i < n; ++i) groups[0].push_back(i);
  } else {
    groups.resize(2);
    for (std::size_t i = 0; i < n; ++i) {
      groups[labels[i] == Label::Causal ? 0 : 1].push_back(i);
    }
  }
  std::vector<std::vector<std::size_t>> folds(k);
  std::size_t dealt = 0;
  for (auto& g : groups) {
    rng.shuffle(std::span<std::size_t>(g));
    for (std::size_t idx : g) folds[dealt++ % k].push_back(idx);
  }
  for (auto& f : folds) std::sort(f.begin(), f.end());
  return folds;
}

std::vector<FoldResult> cross_validate(const LabeledDataset& ds,
                                       const ClassifierSpec& spec,
                                       std::size_t k, std::uint64_t seed,
                                       const CvOptions& options) {
  const StopList& stops =
      options.stoplist != nullptr ? *options.stoplist : StopList::builtin();
  const std::size_t n = ds.size();
  std::vector<std::vector<std::string>> docs(n);
  for (std::size_t i = 0; i < n; ++i) docs[i] = analyze(ds[i].sentence.text, stops);
  const std::vector<Label> labels = ds.labels();
  const auto folds =
      kfold_split(n, k, seed,
                  options.stratified ? std::span<const Label>(labels)
                                     : std::span<const Label>());

  std::optional<Vocabulary> shared_vocab;
  std::optional<IdfVector> shared_idf;
  if (options.shared_vocab) {
    shared_vocab = build_vocabulary(docs, spec.min_freq);
    if (spec.scheme == WeightScheme::TfIdf && !shared_vocab->empty()) {
      shared_idf = compute_idf(count_matrix(docs, *shared_vocab));
    }
  }

  std::vector<FoldResult> results(k);
  parallel_for(k, options.jobs, [&](std::size_t f) {
    std::vector<char> held_out(n, 0);
    for (std::size_t i : folds[f]) held_out[i] = 1;
    std::vector<std::vector<std::string>> train_docs;
    std::vector<Label> train_labels;
    for (std::size_t i = 0; i < n; ++i) {
      if (!held_out[i]) {
        train_docs.push_back(docs[i]);
        train_labels.push_back(labels[i]);
      }
    }
    try {
      TextClassifier model = TextClassifier::train(
          train_docs, train_labels, spec,
          shared_vocab ? &*shared_vocab : nullptr,
          shared_idf ? &*shared_idf : nullptr);
      std::vector<Label> predicted;
      std::vector<Label> truth;
      for (std::size_t i : folds[f]) {
        predicted.push_back(model.predict_tokens(docs[i]));
        truth.push_back(labels[i]);
      }
      FoldResult& r = results[f];
      r.fold_index = f;
      r.cm = confusion(predicted, truth);
      r.metrics = metrics(r.cm);
      r.train_size = train_docs.size();
      r.test_size = folds[f].size();
      r.vocabulary = model.vocabulary().terms();
    } catch (const ConvergenceError& e) {
      throw ConvergenceError("fold " + std::to_string(f + 1) + ": " + e.what(),
                             e.violation());
    } catch (const Error& e) {
      throw Error(e.kind(), "fold " + std::to_string(f + 1) + ": " + e.what());
    }
  });
  return results;
}

CombinedF combine_f(std::span<const FoldResult> results) {
  CombinedF out;
  if (results.empty()) return out;
  double f_sum = 0.0;
  std::size_t f_n = 0;
  double p_sum = 0.0;
  std::size_t p_n = 0;
  double r_sum = 0.0;
  std::size_t r_n = 0;
  double tp = 0.0;
  double fp = 0.0;
  double fn = 0.0;
  for (const auto& r : results) {
    if (r.metrics.f_measure) {
      f_sum += *r.metrics.f_measure;
      ++f_n;
    } else {
      ++out.undefined_f;
    }
    if (r.metrics.precision) {
      p_sum += *r.metrics.precision;
      ++p_n;
    } else {
      ++out.undefined_precision;
    }
    if (r.metrics.recall) {
      r_sum += *r.metrics.recall;
      ++r_n;
    } else {
      ++out.undefined_recall;
    }
    tp += static_cast<double>(r.cm.tp);
    fp += static_cast<double>(r.cm.fp);
    fn += static_cast<double>(r.cm.fn);
  }
  if (f_n > 0) out.f_avg = f_sum / static_cast<double>(f_n);
  std::optional<double> mean_p;
  std::optional<double> mean_r;
  if (p_n > 0) mean_p = p_sum / static_cast<double>(p_n);
  if (r_n > 0) mean_r = r_sum / static_cast<double>(r_n);
  out.f_pr_re = harmonic(mean_p, mean_r);
  if (mean_p && mean_r && *mean_p + *mean_r == 0.0) out.f_pr_re = 0.0;
  // The 1/k factors of the fold means cancel, so the pooled sums are used.
  out.f_tp_fp = ratio(2.0 * tp, 2.0 * tp + fp + fn);
  return out;
}

std::string_view to_string(GridParam p) {
  switch (p) {
    case GridParam::C:
      return "C";
    case GridParam::Sigma:
      return "sigma";
    case GridParam::Alpha:
      return "alpha";
    case GridParam::PolyC:
      return "poly_c";
    case GridParam::PolyDegree:
      return "poly_degree";
  }
  return "unknown";
}

std::optional<GridParam> parse_grid_param(std::string_view s) {
  if (s == "C" || s == "c") return GridParam::C;
  if (s == "sigma") return GridParam::Sigma;
  if (s == "alpha") return GridParam::Alpha;
  if (s == "poly_c" || s == "poly-c") return GridParam::PolyC;
  if (s == "poly_degree" || s == "poly-degree") return GridParam::PolyDegree;
  return std::nullopt;
}

std::vector<GridRow> GridResult::ranked(WeightScheme scheme) const {
  std::vector<GridRow> out = rows;
  auto key = [scheme](const GridRow& r) {
    return scheme == WeightScheme::TfIdf ? r.f_tfidf : r.f_tf;
  };
  std::stable_sort(out.begin(), out.end(),
                   [&](const GridRow& a, const GridRow& b) {
                     const double fa = key(a).value_or(-1.0);
                     const double fb = key(b).value_or(-1.0);
                     if (fa != fb) return fa > fb;
                     return a.value < b.value;
                   });
  return out;
}

GridResult grid_search(const LabeledDataset& ds, const ClassifierSpec& base,
                       GridParam param, std::span<const double> values,
                       std::size_t k, std::uint64_t seed,
                       const CvOptions& options) {
  if (values.empty()) {
    throw Error(ErrorKind::InvalidArgument, "parameter grid is empty");
  }
  GridResult out;
  out.param = param;
  out.rows.resize(values.size());
  const WeightScheme schemes[] = {WeightScheme::Tf, WeightScheme::TfIdf};
  // Cells run sequentially; folds inside a cell use the job pool.
  for (std::size_t cell = 0; cell < values.size() * 2; ++cell) {
    const std::size_t vi = cell / 2;
    ClassifierSpec spec = base;
    spec.scheme = schemes[cell % 2];
    const double v = values[vi];
    switch (param) {
      case GridParam::C:
        spec.C = v;
        break;
      case GridParam::Sigma:
        spec.sigma = v;
        break;
      case GridParam::Alpha:
        spec.alpha = v;
        break;
      case GridParam::PolyC:
        spec.poly_c = v;
        break;
      case GridParam::PolyDegree:
        spec.poly_degree = static_cast<int>(v);
        break;
    }
    const auto folds = cross_validate(ds, spec, k, seed, options);
    const auto f = combine_f(folds).f_tp_fp;
    out.rows[vi].value = v;
    (cell % 2 == 0 ? out.rows[vi].f_tf : out.rows[vi].f_tfidf) = f;
  }
  if (auto r = out.ranked(WeightScheme::Tf); r.front().f_tf) {
    out.best_tf = r.front().value;
  }
  if (auto r = out.ranked(WeightScheme::TfIdf); r.front().f_tfidf) {
    out.best_tfidf = r.front().value;
  }
  return out;
}

IrEvalResult ir_eval(const std::set<SentenceId>& expert,
                     const std::set<SentenceId>& algorithm) {
  IrEvalResult r;
  r.relevant = expert;
  r.retrieved = algorithm;
  for (const auto& id : algorithm) {
    if (expert.count(id)) ++r.overlap;
  }
  const auto both = static_cast<double>(r.overlap);
  r.precision = ratio(both, static_cast<double>(algorithm.size()));
  r.recall = ratio(both, static_cast<double>(expert.size()));
  if (r.overlap == 0 && (!expert.empty() || !algorithm.empty())) {
    r.f = 0.0;
  } else {
    r.f = harmonic(r.precision, r.recall);
  }
  return r;
}

std::set<SentenceId> load_sentence_ids(const std::filesystem::path& path) {
  std::istringstream in(read_text_file(path));
  std::set<SentenceId> ids;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#') continue;
    auto cols = detail::split(line, '\t');
    std::size_t index = 0;
    if (cols.size() < 2 || cols[0].empty() ||
        std::from_chars(cols[1].data(), cols[1].data() + cols[1].size(), index)
                .ec != std::errc()) {
      throw Error(ErrorKind::Format,
                  path.string() + ": line " + std::to_string(line_no) +
                      ": expected doc_id<TAB>sentence_index");
    }
    ids.insert(SentenceId{std::string(cols[0]), index});
  }
  return ids;
}

void write_cv_report(std::ostream& out, std::span<const FoldResult> folds,
                     const CombinedF& combined) {
  out << "fold\ttp\tfp\ttn\tfn\tprecision\trecall\tf\n";
  double tp = 0, fp = 0, tn = 0, fn = 0, p = 0, r = 0;
  std::size_t p_n = 0, r_n = 0;
  for (const auto& f : folds) {
    out << f.fold_index + 1 << '\t' << f.cm.tp << '\t' << f.cm.fp << '\t'
        << f.cm.tn << '\t' << f.cm.fn << '\t' << fmt(f.metrics.precision)
        << '\t' << fmt(f.metrics.recall) << '\t' << fmt(f.metrics.f_measure)
        << '\n';
    tp += static_cast<double>(f.cm.tp);
    fp += static_cast<double>(f.cm.fp);
    tn += static_cast<double>(f.cm.tn);
    fn += static_cast<double>(f.cm.fn);
    if (f.metrics.precision) {
      p += *f.metrics.precision;
      ++p_n;
    }
    if (f.metrics.recall) {
      r += *f.metrics.recall;
      ++r_n;
    }
  }
  const double k = folds.empty() ? 1.0 : static_cast<double>(folds.size());
  auto mean = [](double s, std::size_t n) -> std::optional<double> {
    if (n == 0) return std::nullopt;
    return s / static_cast<double>(n);
  };
  out << "f_avg\t-\t-\t-\t-\t-\t-\t" << fmt(combined.f_avg) << '\n';
  out << "f_pr_re\t-\t-\t-\t-\t" << fmt(mean(p, p_n)) << '\t'
      << fmt(mean(r, r_n)) << '\t' << fmt(combined.f_pr_re) << '\n';
  out << "f_tp_fp\t" << fmt(tp / k) << '\t' << fmt(fp / k) << '\t'
      << fmt(tn / k) << '\t' << fmt(fn / k) << "\t-\t-\t"
      << fmt(combined.f_tp_fp) << '\n';
}

void write_grid_report(std::ostream& out, const GridResult& grid) {
  out << to_string(grid.param) << "\tf_tf\tf_tfidf\n";
  for (const auto& row : grid.rows) {
    out << detail::format_real(row.value, 12) << '\t' << fmt(row.f_tf) << '\t'
        << fmt(row.f_tfidf) << '\n';
  }
  auto best = [](std::optional<double> v) {
    return v ? detail::format_real(*v, 12) : std::string("NA");
  };
  out << "best\t" << best(grid.best_tf) << '\t' << best(grid.best_tfidf)
      << '\n';
}

void write_ir_report(std::ostream& out, std::span<const IrReportRow> rows) {
  out << "report\tE\tA\tE_and_A\tprecision\trecall\tf\n";
  std::size_t e = 0, a = 0, both = 0;
  double p = 0, r = 0, f = 0;
  std::size_t p_n = 0, r_n = 0, f_n = 0;
  for (const auto& row : rows) {
    const auto& res = row.result;
    out << row.report << '\t' << res.relevant.size() << '\t'
        << res.retrieved.size() << '\t' << res.overlap << '\t'
        << fmt(res.precision) << '\t' << fmt(res.recall) << '\t' << fmt(res.f)
        << '\n';
    e += res.relevant.size();
    a += res.retrieved.size();
    both += res.overlap;
    if (res.precision) {
      p += *res.precision;
      ++p_n;
    }
    if (res.recall) {
      r += *res.recall;
      ++r_n;
    }
    if (res.f) {
      f += *res.f;
      ++f_n;
    }
  }
  auto mean = [](double s, std::size_t n) -> std::optional<double> {
    if (n == 0) return std::nullopt;
    return s / static_cast<double>(n);
  };
  out << "mean\t" << e << '\t' << a << '\t' << both << '\t'
      << fmt(mean(p, p_n)) << '\t' << fmt(mean(r, r_n)) << '\t'
      << fmt(mean(f, f_n)) << '\n';
}

}  // namespace causex
