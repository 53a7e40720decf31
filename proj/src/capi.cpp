// Copyright 2026 The causex Authors.
// SPDX-License-Identifier: Apache-2.0

#include "causex/causex.h"

#include <cmath>
#include <cstdio>
#include <cstring>
#include <exception>
#include <fstream>
#include <iostream>
#include <limits>
#include <map>
#include <memory>
#include <new>
#include <sstream>
#include <string>
#include <vector>

#include "causex/classifier.hpp"
#include "causex/connectives.hpp"
#include "causex/corpus.hpp"
#include "causex/error.hpp"
#include "causex/eval.hpp"
#include "causex/preprocess.hpp"
#include "causex/resources.hpp"
#include "causex/rng.hpp"
#include "causex/vectorize.hpp"
#include "text_util.hpp"

struct cx_dataset {
  causex::LabeledDataset ds;
};
struct cx_stoplist {
  causex::StopList stops;
};
struct cx_lexicon {
  causex::ConnectiveLexicon lex;
};
struct cx_model {
  causex::TextClassifier clf;
};
struct cx_cv_result {
  std::vector<causex::FoldResult> folds;
  causex::CombinedF combined;
};
struct cx_grid_result {
  causex::GridResult grid;
};

namespace {

thread_local std::string g_last_error;

cx_status fail(cx_status status, std::string message) {
  g_last_error = std::move(message);
  return status;
}

cx_status status_of(causex::ErrorKind kind) {
  switch (kind) {
    case causex::ErrorKind::InvalidArgument:
      return CX_ERR_INVALID_ARGUMENT;
    case causex::ErrorKind::Io:
      return CX_ERR_IO;
    case causex::ErrorKind::Format:
      return CX_ERR_FORMAT;
    case causex::ErrorKind::Convergence:
      return CX_ERR_CONVERGENCE;
    case causex::ErrorKind::Mismatch:
      return CX_ERR_MISMATCH;
  }
  return CX_ERR_INTERNAL;
}

template <typename Fn>
cx_status guarded(Fn&& fn) {
  try {
    fn();
    g_last_error.clear();
    return CX_OK;
  } catch (const causex::Error& e) {
    return fail(status_of(e.kind()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(CX_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(CX_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(CX_ERR_INTERNAL, "unknown error");
  }
}

void require(bool ok, const char* what) {
  if (!ok) throw causex::Error(causex::ErrorKind::InvalidArgument, what);
}

void emit(const char* path, const std::string& header, const std::string& body) {
  require(path != nullptr, "output path is null");
  std::string text;
  if (!header.empty()) {
    text = header.front() == '#' ? header : "# " + header;
    text += '\n';
  }
  text += body;
  if (std::strcmp(path, "-") == 0) {
    std::cout << text << std::flush;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw causex::Error(causex::ErrorKind::Io,
                        std::string("cannot write ") + path);
  }
  out << text;
  out.flush();
  if (!out) {
    throw causex::Error(causex::ErrorKind::Io,
                        std::string("write failed: ") + path);
  }
}

std::string header_of(const char* header) {
  return header != nullptr ? std::string(header) : std::string();
}

const causex::StopList& stops_of(const cx_stoplist* s) {
  return s != nullptr ? s->stops : causex::StopList::builtin();
}

const causex::ConnectiveLexicon& lexicon_of(const cx_lexicon* l) {
  return l != nullptr ? l->lex : causex::ConnectiveLexicon::builtin();
}

causex::ClassifierSpec to_spec(const cx_spec* s) {
  require(s != nullptr, "spec is null");
  causex::ClassifierSpec out;
  switch (s->classifier) {
    case CX_NAIVE_BAYES:
      out.kind = causex::ClassifierKind::NaiveBayes;
      break;
    case CX_SVM_LINEAR:
      out.kind = causex::ClassifierKind::SvmLinear;
      break;
    case CX_SVM_GAUSSIAN:
      out.kind = causex::ClassifierKind::SvmGaussian;
      break;
    case CX_SVM_POLYNOMIAL:
      out.kind = causex::ClassifierKind::SvmPolynomial;
      break;
    default:
      require(false, "unknown classifier kind");
  }
  switch (s->scheme) {
    case CX_BOOLEAN:
      out.scheme = causex::WeightScheme::Boolean;
      break;
    case CX_TF:
      out.scheme = causex::WeightScheme::Tf;
      break;
    case CX_TFIDF:
      out.scheme = causex::WeightScheme::TfIdf;
      break;
    default:
      require(false, "unknown weighting scheme");
  }
  out.alpha = s->alpha;
  out.C = s->C;
  out.sigma = s->sigma;
  out.poly_c = s->poly_c;
  out.poly_degree = s->poly_degree;
  out.tol = s->tol;
  out.min_freq = s->min_freq;
  return out;
}

causex::CvOptions to_cv(const cx_cv_options* o, const cx_stoplist* stops) {
  causex::CvOptions cv;
  cv.stratified = o->stratified != 0;
  cv.shared_vocab = o->shared_vocab != 0;
  cv.jobs = o->jobs == 0 ? 1 : o->jobs;
  cv.stoplist = &stops_of(stops);
  return cv;
}

double or_nan(const std::optional<double>& v) {
  return v ? *v : std::numeric_limits<double>::quiet_NaN();
}

std::string fmt_score(double v) { return causex::detail::format_real(v, 12); }

std::vector<causex::Document> load_reports(const char* const* paths,
                                           size_t n) {
  require(paths != nullptr || n == 0, "report paths are null");
  std::vector<causex::Document> docs;
  for (size_t i = 0; i < n; ++i) {
    require(paths[i] != nullptr, "report path is null");
    docs.push_back(causex::load_report(paths[i]));
  }
  return docs;
}

std::string match_row(const causex::CausalMatch& m) {
  std::string row = m.sentence.doc_id + '\t' +
                    std::to_string(m.sentence.index) + '\t' +
                    std::string(causex::to_string(m.category)) + '\t' +
                    m.connective + '\t' + m.sentence.text + '\n';
  // Sentences may span lines in the source text.
  for (size_t i = 0; i + 1 < row.size(); ++i) {
    if (row[i] == '\n' || row[i] == '\r') row[i] = ' ';
  }
  return row;
}

}  // namespace

extern "C" {

const char* cx_version(void) { return "0.1.0"; }

const char* cx_rng_algorithm(void) { return causex::Rng::kAlgorithmId; }

const char* cx_status_name(cx_status status) {
  switch (status) {
    case CX_OK:
      return "ok";
    case CX_ERR_INVALID_ARGUMENT:
      return "invalid argument";
    case CX_ERR_IO:
      return "i/o error";
    case CX_ERR_FORMAT:
      return "format error";
    case CX_ERR_CONVERGENCE:
      return "no convergence";
    case CX_ERR_MISMATCH:
      return "mismatch";
    case CX_ERR_INTERNAL:
      return "internal error";
  }
  return "unknown status";
}

const char* cx_last_error(void) { return g_last_error.c_str(); }

cx_status cx_dataset_load(const char* path, cx_dataset** out) {
  return guarded([&] {
    require(path != nullptr && out != nullptr, "null argument");
    *out = new cx_dataset{causex::load_labeled_dataset(path)};
  });
}

cx_status cx_dataset_split(const cx_dataset* ds, double train_fraction,
                           uint64_t seed, cx_dataset** train,
                           cx_dataset** test) {
  return guarded([&] {
    require(ds != nullptr && train != nullptr && test != nullptr,
            "null argument");
    auto [a, b] = causex::split_train_test(ds->ds, train_fraction, seed);
    auto tr = std::make_unique<cx_dataset>(cx_dataset{std::move(a)});
    auto te = std::make_unique<cx_dataset>(cx_dataset{std::move(b)});
    *train = tr.release();
    *test = te.release();
  });
}

size_t cx_dataset_size(const cx_dataset* ds) {
  return ds != nullptr ? ds->ds.size() : 0;
}

size_t cx_dataset_count(const cx_dataset* ds, int label) {
  if (ds == nullptr) return 0;
  return ds->ds.count(label > 0 ? causex::Label::Causal
                                : causex::Label::NonCausal);
}

cx_status cx_dataset_write(const cx_dataset* ds, const char* path,
                           const char* header) {
  return guarded([&] {
    require(ds != nullptr, "dataset is null");
    std::ostringstream body;
    causex::write_labeled_dataset(body, ds->ds);
    emit(path, header_of(header), body.str());
  });
}

void cx_dataset_free(cx_dataset* ds) { delete ds; }

cx_status cx_lexicon_load(const char* path, cx_lexicon** out) {
  return guarded([&] {
    require(out != nullptr, "null argument");
    if (path == nullptr) {
      *out = new cx_lexicon{causex::ConnectiveLexicon::builtin()};
      return;
    }
    auto lex = causex::ConnectiveLexicon::load(path);
    if (lex.empty()) {
      throw causex::Error(causex::ErrorKind::Format,
                          std::string(path) + ": lexicon has no entries");
    }
    *out = new cx_lexicon{std::move(lex)};
  });
}

size_t cx_lexicon_size(const cx_lexicon* lex) {
  return lex != nullptr ? lex->lex.size() : 0;
}

void cx_lexicon_free(cx_lexicon* lex) { delete lex; }

cx_status cx_stoplist_load(const char* path, const cx_lexicon* lex,
                           cx_stoplist** out) {
  return guarded([&] {
    require(out != nullptr, "null argument");
    if (path == nullptr && lex == nullptr) {
      *out = new cx_stoplist{causex::StopList::builtin()};
      return;
    }
    const std::string content =
        path != nullptr ? causex::read_text_file(path)
                        : std::string(causex::resources::stoplist());
    auto words = causex::detail::parse_word_list(content);
    auto excluded = lexicon_of(lex).stoplist_exclusions(words);
    *out = new cx_stoplist{causex::StopList(words, excluded)};
  });
}

size_t cx_stoplist_size(const cx_stoplist* stops) {
  return stops != nullptr ? stops->stops.size() : 0;
}

void cx_stoplist_free(cx_stoplist* stops) { delete stops; }

void cx_spec_init(cx_spec* spec) {
  if (spec == nullptr) return;
  const causex::ClassifierSpec d;
  spec->classifier = CX_NAIVE_BAYES;
  spec->scheme = CX_TF;
  spec->alpha = d.alpha;
  spec->C = d.C;
  spec->sigma = d.sigma;
  spec->poly_c = d.poly_c;
  spec->poly_degree = d.poly_degree;
  spec->tol = d.tol;
  spec->min_freq = d.min_freq;
}

cx_status cx_parse_classifier(const char* name, cx_classifier_kind* out) {
  return guarded([&] {
    require(name != nullptr && out != nullptr, "null argument");
    auto k = causex::parse_classifier_kind(name);
    if (!k) {
      throw causex::Error(causex::ErrorKind::InvalidArgument,
                          std::string("unknown classifier '") + name +
                              "' (expected nb, svm-linear, svm-gaussian or "
                              "svm-poly)");
    }
    switch (*k) {
      case causex::ClassifierKind::NaiveBayes:
        *out = CX_NAIVE_BAYES;
        break;
      case causex::ClassifierKind::SvmLinear:
        *out = CX_SVM_LINEAR;
        break;
      case causex::ClassifierKind::SvmGaussian:
        *out = CX_SVM_GAUSSIAN;
        break;
      case causex::ClassifierKind::SvmPolynomial:
        *out = CX_SVM_POLYNOMIAL;
        break;
    }
  });
}

cx_status cx_parse_scheme(const char* name, cx_scheme* out) {
  return guarded([&] {
    require(name != nullptr && out != nullptr, "null argument");
    auto s = causex::parse_weight_scheme(name);
    if (!s) {
      throw causex::Error(causex::ErrorKind::InvalidArgument,
                          std::string("unknown weighting scheme '") + name +
                              "' (expected boolean, tf or tfidf)");
    }
    switch (*s) {
      case causex::WeightScheme::Boolean:
        *out = CX_BOOLEAN;
        break;
      case causex::WeightScheme::Tf:
        *out = CX_TF;
        break;
      case causex::WeightScheme::TfIdf:
        *out = CX_TFIDF;
        break;
    }
  });
}

void cx_cv_options_init(cx_cv_options* options) {
  if (options == nullptr) return;
  options->k = 10;
  options->seed = 0;
  options->jobs = 1;
  options->stratified = 1;
  options->shared_vocab = 0;
}

cx_status cx_metrics_compute(const cx_confusion* cm, cx_metrics* out) {
  return guarded([&] {
    require(cm != nullptr && out != nullptr, "null argument");
    const auto m = causex::metrics({cm->tp, cm->fp, cm->tn, cm->fn});
    out->accuracy = or_nan(m.accuracy);
    out->error_rate = or_nan(m.error_rate);
    out->recall = or_nan(m.recall);
    out->precision = or_nan(m.precision);
    out->specificity = or_nan(m.specificity);
    out->fpr = or_nan(m.fpr);
    out->fnr = or_nan(m.fnr);
    out->f_measure = or_nan(m.f_measure);
  });
}

cx_status cx_preprocess(const cx_dataset* train, const cx_dataset* test,
                        const cx_stoplist* stops, cx_scheme scheme,
                        size_t min_freq, const char* vocabulary_path,
                        const char* train_matrix_path,
                        const char* test_matrix_path, const char* header,
                        cx_pipeline_counts* counts) {
  return guarded([&] {
    require(train != nullptr, "training dataset is null");
    cx_spec tmp;
    cx_spec_init(&tmp);
    tmp.scheme = scheme;
    const auto ws = to_spec(&tmp).scheme;
    const auto& sl = stops_of(stops);

    causex::PipelineCounts pc;
    std::vector<std::vector<std::string>> train_docs;
    for (const auto& item : train->ds.items()) {
      train_docs.push_back(causex::analyze(item.sentence.text, sl, &pc));
    }
    const auto vocab = causex::build_vocabulary(train_docs, min_freq);
    if (vocab.empty()) {
      throw causex::Error(causex::ErrorKind::InvalidArgument,
                          "no term occurs more than min_freq times");
    }
    std::optional<causex::IdfVector> idf;
    if (ws == causex::WeightScheme::TfIdf) {
      idf = causex::compute_idf(causex::count_matrix(train_docs, vocab));
    }
    const std::string hdr = header_of(header);
    const std::string matrix_hdr =
        (hdr.empty() ? std::string("#") : hdr) +
        " vocabulary=" + vocab.fingerprint();

    auto dump = [&](const std::vector<std::vector<std::string>>& docs,
                    const char* path) {
      auto m = causex::build_matrix(docs, vocab, ws,
                                    idf ? &*idf : nullptr);
      std::ostringstream body;
      causex::write_matrix(body, m);
      emit(path, matrix_hdr, body.str());
    };

    if (vocabulary_path != nullptr) {
      std::ostringstream body;
      vocab.write(body);
      emit(vocabulary_path, hdr, body.str());
    }
    if (train_matrix_path != nullptr) dump(train_docs, train_matrix_path);
    if (test != nullptr && test_matrix_path != nullptr) {
      std::vector<std::vector<std::string>> test_docs;
      for (const auto& item : test->ds.items()) {
        test_docs.push_back(causex::analyze(item.sentence.text, sl));
      }
      dump(test_docs, test_matrix_path);
    }
    if (counts != nullptr) {
      counts->raw_tokens = pc.raw_tokens;
      counts->content_tokens = pc.content_tokens;
      counts->vocabulary = vocab.size();
    }
  });
}

cx_status cx_model_train(const cx_dataset* train, const cx_stoplist* stops,
                         const cx_spec* spec, cx_model** out) {
  return guarded([&] {
    require(train != nullptr && out != nullptr, "null argument");
    const auto s = to_spec(spec);
    const auto& sl = stops_of(stops);
    std::vector<std::vector<std::string>> docs;
    for (const auto& item : train->ds.items()) {
      docs.push_back(causex::analyze(item.sentence.text, sl));
    }
    const auto labels = train->ds.labels();
    *out = new cx_model{causex::TextClassifier::train(docs, labels, s)};
  });
}

cx_status cx_model_load(const char* path, cx_model** out) {
  return guarded([&] {
    require(path != nullptr && out != nullptr, "null argument");
    std::istringstream in(causex::read_text_file(path));
    try {
      *out = new cx_model{causex::TextClassifier::read(in)};
    } catch (const causex::Error& e) {
      throw causex::Error(e.kind(), std::string(path) + ": " + e.what());
    }
  });
}

cx_status cx_model_save(const cx_model* model, const char* path,
                        const char* header) {
  return guarded([&] {
    require(model != nullptr, "model is null");
    std::ostringstream body;
    model->clf.write(body);
    emit(path, header_of(header), body.str());
  });
}

size_t cx_model_vocabulary_size(const cx_model* model) {
  return model != nullptr ? model->clf.vocabulary().size() : 0;
}

void cx_model_fingerprint(const cx_model* model, char* buf) {
  if (buf == nullptr) return;
  buf[0] = '\0';
  if (model == nullptr) return;
  const std::string fp = model->clf.vocabulary().fingerprint();
  std::snprintf(buf, 17, "%s", fp.c_str());
}

void cx_model_free(cx_model* model) { delete model; }

cx_status cx_model_predict_dataset(const cx_model* model, const cx_dataset* ds,
                                   const cx_stoplist* stops, const char* path,
                                   const char* header, cx_confusion* cm) {
  return guarded([&] {
    require(model != nullptr && ds != nullptr, "null argument");
    const auto& sl = stops_of(stops);
    std::ostringstream body;
    body << "doc_id\tsentence_index\tlabel\tpredicted\tscore\n";
    std::vector<causex::Label> predicted;
    for (const auto& item : ds->ds.items()) {
      const auto x = model->clf.featurize(causex::analyze(item.sentence.text, sl));
      const double score = model->clf.score(x);
      const auto label = model->clf.predict(x);
      predicted.push_back(label);
      body << item.sentence.doc_id << '\t' << item.sentence.index << '\t'
           << causex::to_int(item.label) << '\t' << causex::to_int(label)
           << '\t' << fmt_score(score) << '\n';
    }
    emit(path, header_of(header), body.str());
    if (cm != nullptr) {
      const auto labels = ds->ds.labels();
      const auto c = causex::confusion(predicted, labels);
      *cm = cx_confusion{c.tp, c.fp, c.tn, c.fn};
    }
  });
}

cx_status cx_model_predict_matrix(const cx_model* model,
                                  const char* matrix_path, const char* path,
                                  const char* header) {
  return guarded([&] {
    require(model != nullptr && matrix_path != nullptr, "null argument");
    const std::string text = causex::read_text_file(matrix_path);
    std::string fingerprint;
    {
      std::istringstream lines(text);
      std::string line;
      while (std::getline(lines, line) && !line.empty() && line[0] == '#') {
        const auto pos = line.find("vocabulary=");
        if (pos != std::string::npos) {
          fingerprint = line.substr(pos + 11, 16);
        }
      }
    }
    if (fingerprint.empty()) {
      throw causex::Error(causex::ErrorKind::Format,
                          std::string(matrix_path) +
                              ": matrix header has no vocabulary fingerprint");
    }
    if (fingerprint != model->clf.vocabulary().fingerprint()) {
      throw causex::Error(causex::ErrorKind::Mismatch,
                          "vocabulary mismatch: matrix " + fingerprint +
                              ", model " +
                              model->clf.vocabulary().fingerprint());
    }
    std::istringstream in(text);
    const auto m = causex::read_matrix(in);
    if (m.cols != model->clf.vocabulary().size()) {
      throw causex::Error(causex::ErrorKind::Mismatch,
                          "vocabulary mismatch: matrix has " +
                              std::to_string(m.cols) + " columns");
    }
    if (m.scheme != model->clf.spec().scheme) {
      throw causex::Error(
          causex::ErrorKind::Mismatch,
          "weighting mismatch: matrix is " +
              std::string(causex::to_string(m.scheme)) + ", model expects " +
              std::string(causex::to_string(model->clf.spec().scheme)));
    }
    std::ostringstream body;
    body << "row\tpredicted\tscore\n";
    for (size_t r = 0; r < m.rows.size(); ++r) {
      const double score = model->clf.score(m.rows[r]);
      body << r << '\t' << causex::to_int(model->clf.predict(m.rows[r]))
           << '\t' << fmt_score(score) << '\n';
    }
    emit(path, header_of(header), body.str());
  });
}

cx_status cx_cross_validate(const cx_dataset* ds, const cx_stoplist* stops,
                            const cx_spec* spec, const cx_cv_options* options,
                            cx_cv_result** out) {
  return guarded([&] {
    require(ds != nullptr && options != nullptr && out != nullptr,
            "null argument");
    auto folds = causex::cross_validate(ds->ds, to_spec(spec), options->k,
                                        options->seed, to_cv(options, stops));
    auto combined = causex::combine_f(folds);
    *out = new cx_cv_result{std::move(folds), combined};
  });
}

size_t cx_cv_fold_count(const cx_cv_result* cv) {
  return cv != nullptr ? cv->folds.size() : 0;
}

cx_status cx_cv_fold_confusion(const cx_cv_result* cv, size_t fold,
                               cx_confusion* out) {
  return guarded([&] {
    require(cv != nullptr && out != nullptr, "null argument");
    require(fold < cv->folds.size(), "fold index out of range");
    const auto& c = cv->folds[fold].cm;
    *out = cx_confusion{c.tp, c.fp, c.tn, c.fn};
  });
}

void cx_cv_combined(const cx_cv_result* cv, cx_combined_f* out) {
  if (cv == nullptr || out == nullptr) return;
  out->f_avg = or_nan(cv->combined.f_avg);
  out->f_pr_re = or_nan(cv->combined.f_pr_re);
  out->f_tp_fp = or_nan(cv->combined.f_tp_fp);
}

cx_status cx_cv_write_report(const cx_cv_result* cv, const char* path,
                             const char* header) {
  return guarded([&] {
    require(cv != nullptr, "cv result is null");
    std::ostringstream body;
    causex::write_cv_report(body, cv->folds, cv->combined);
    emit(path, header_of(header), body.str());
  });
}

void cx_cv_free(cx_cv_result* cv) { delete cv; }

cx_status cx_grid_search(const cx_dataset* ds, const cx_stoplist* stops,
                         const cx_spec* base, const char* param,
                         const double* values, size_t n_values,
                         const cx_cv_options* options, cx_grid_result** out) {
  return guarded([&] {
    require(ds != nullptr && param != nullptr && options != nullptr &&
                out != nullptr && (values != nullptr || n_values == 0),
            "null argument");
    auto p = causex::parse_grid_param(param);
    if (!p) {
      throw causex::Error(causex::ErrorKind::InvalidArgument,
                          std::string("unknown grid parameter '") + param +
                              "' (expected C, sigma, alpha, poly_c or "
                              "poly_degree)");
    }
    auto grid = causex::grid_search(
        ds->ds, to_spec(base), *p, std::span<const double>(values, n_values),
        options->k, options->seed, to_cv(options, stops));
    *out = new cx_grid_result{std::move(grid)};
  });
}

cx_status cx_grid_best(const cx_grid_result* grid, cx_scheme scheme,
                       double* out) {
  return guarded([&] {
    require(grid != nullptr && out != nullptr, "null argument");
    require(scheme == CX_TF || scheme == CX_TFIDF,
            "grid search covers tf and tfidf only");
    *out = or_nan(scheme == CX_TF ? grid->grid.best_tf : grid->grid.best_tfidf);
  });
}

cx_status cx_grid_write_report(const cx_grid_result* grid, const char* path,
                               const char* header) {
  return guarded([&] {
    require(grid != nullptr, "grid result is null");
    std::ostringstream body;
    causex::write_grid_report(body, grid->grid);
    emit(path, header_of(header), body.str());
  });
}

void cx_grid_free(cx_grid_result* grid) { delete grid; }

cx_status cx_extract(const char* const* report_paths, size_t n_reports,
                     const cx_lexicon* lex, int strict_ambiguous,
                     const char* path, const char* header, size_t* n_matches) {
  return guarded([&] {
    const auto docs = load_reports(report_paths, n_reports);
    causex::MatchOptions opts;
    opts.strict_ambiguous = strict_ambiguous != 0;
    std::ostringstream body;
    body << "doc_id\tsentence_index\tcategory\tconnective\ttext\n";
    size_t total = 0;
    for (const auto& doc : docs) {
      for (const auto& m : causex::extract_causal(doc, lexicon_of(lex), opts)) {
        body << match_row(m);
        ++total;
      }
    }
    emit(path, header_of(header), body.str());
    if (n_matches != nullptr) *n_matches = total;
  });
}

cx_status cx_eval_extract(const char* const* report_paths, size_t n_reports,
                          const char* expert_path, const cx_lexicon* lex,
                          int strict_ambiguous, const char* path,
                          const char* header, cx_ir_summary* summary) {
  return guarded([&] {
    require(expert_path != nullptr, "expert file is null");
    const auto docs = load_reports(report_paths, n_reports);
    const auto expert = causex::load_sentence_ids(expert_path);
    causex::MatchOptions opts;
    opts.strict_ambiguous = strict_ambiguous != 0;
    std::vector<causex::IrReportRow> rows;
    size_t total = 0;
    for (const auto& doc : docs) {
      std::set<causex::SentenceId> e;
      std::set<causex::SentenceId> a;
      for (const auto& id : expert) {
        if (id.doc_id == doc.id) e.insert(id);
      }
      for (const auto& m : causex::extract_causal(doc, lexicon_of(lex), opts)) {
        a.insert({m.sentence.doc_id, m.sentence.index});
      }
      total += a.size();
      rows.push_back({doc.id, causex::ir_eval(e, a)});
    }
    std::ostringstream body;
    causex::write_ir_report(body, rows);
    emit(path, header_of(header), body.str());
    if (summary != nullptr) {
      double p = 0, r = 0, f = 0;
      size_t pn = 0, rn = 0, fn = 0;
      for (const auto& row : rows) {
        if (row.result.precision) p += *row.result.precision, ++pn;
        if (row.result.recall) r += *row.result.recall, ++rn;
        if (row.result.f) f += *row.result.f, ++fn;
      }
      const double nan = std::numeric_limits<double>::quiet_NaN();
      summary->reports = rows.size();
      summary->matches = total;
      summary->mean_precision = pn ? p / static_cast<double>(pn) : nan;
      summary->mean_recall = rn ? r / static_cast<double>(rn) : nan;
      summary->mean_f = fn ? f / static_cast<double>(fn) : nan;
    }
  });
}

}  // extern "C"
