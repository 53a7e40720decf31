// Copyright 2026 The causex Authors.
// SPDX-License-Identifier: Apache-2.0

#include "causex/classifier.hpp"

#include <istream>
#include <ostream>
#include <sstream>

#include "causex/error.hpp"
#include "text_util.hpp"

namespace causex {

std::string_view to_string(ClassifierKind k) {
  switch (k) {
    case ClassifierKind::NaiveBayes:
      return "nb";
    case ClassifierKind::SvmLinear:
      return "svm-linear";
    case ClassifierKind::SvmGaussian:
      return "svm-gaussian";
    case ClassifierKind::SvmPolynomial:
      return "svm-poly";
  }
  return "unknown";
}

std::optional<ClassifierKind> parse_classifier_kind(std::string_view s) {
  if (s == "nb") return ClassifierKind::NaiveBayes;
  if (s == "svm-linear") return ClassifierKind::SvmLinear;
  if (s == "svm-gaussian") return ClassifierKind::SvmGaussian;
  if (s == "svm-poly") return ClassifierKind::SvmPolynomial;
  return std::nullopt;
}

Kernel ClassifierSpec::kernel() const {
  switch (kind) {
    case ClassifierKind::SvmGaussian:
      return Kernel::gaussian(sigma);
    case ClassifierKind::SvmPolynomial:
      return Kernel::polynomial(poly_c, poly_degree);
    default:
      return Kernel::linear();
  }
}

std::string ClassifierSpec::describe() const {
  std::string s = "classifier=" + std::string(to_string(kind)) +
                  " scheme=" + std::string(to_string(scheme)) +
                  " min_freq=" + std::to_string(min_freq);
  if (kind == ClassifierKind::NaiveBayes) {
    s += " alpha=" + detail::format_real(alpha, 17);
  } else {
    s += " C=" + detail::format_real(C, 17) +
         " tol=" + detail::format_real(tol, 17);
    if (kind == ClassifierKind::SvmGaussian) {
      s += " sigma=" + detail::format_real(sigma, 17);
    }
    if (kind == ClassifierKind::SvmPolynomial) {
      s += " poly_c=" + detail::format_real(poly_c, 17) +
           " poly_degree=" + std::to_string(poly_degree);
    }
  }
  return s;
}

TextClassifier TextClassifier::train(
    std::span<const std::vector<std::string>> docs,
    std::span<const Label> labels, const ClassifierSpec& spec,
    const Vocabulary* fixed_vocab, const IdfVector* fixed_idf) {
  TextClassifier tc;
  tc.spec_ = spec;
  tc.vocab_ = fixed_vocab != nullptr ? *fixed_vocab
                                     : build_vocabulary(docs, spec.min_freq);
  if (tc.vocab_.empty()) {
    throw Error(ErrorKind::InvalidArgument,
                "vocabulary is empty; lower --min-freq or supply more text");
  }
  const DocTermMatrix counts = count_matrix(docs, tc.vocab_);
  if (spec.scheme == WeightScheme::TfIdf) {
    if (fixed_idf != nullptr && fixed_idf->values.size() != tc.vocab_.size()) {
      throw Error(ErrorKind::Mismatch, "idf vector does not fit vocabulary");
    }
    tc.idf_ = fixed_idf != nullptr ? *fixed_idf : compute_idf(counts);
  }
  const DocTermMatrix x = build_matrix(docs, tc.vocab_, spec.scheme,
                                       tc.idf_ ? &*tc.idf_ : nullptr);
  if (spec.kind == ClassifierKind::NaiveBayes) {
    tc.model_ = train_nb(x, labels, spec.alpha);
  } else {
    SvmOptions opt;
    opt.C = spec.C;
    opt.tol = spec.tol;
    tc.model_ = train_svm(x, labels, spec.kernel(), opt);
  }
  return tc;
}

SparseVector TextClassifier::featurize(
    std::span<const std::string> tokens) const {
  return project(tokens, vocab_, spec_.scheme, idf_ ? &*idf_ : nullptr);
}

double TextClassifier::score(const SparseVector& x) const {
  if (const auto* nb_model = nb()) {
    const ClassScores s = nb_model->log_posterior(x);
    return s.causal - s.non_causal;
  }
  return svm()->decision_value(x);
}

Label TextClassifier::predict(const SparseVector& x) const {
  if (const auto* nb_model = nb()) return nb_model->predict(x);
  return svm()->predict(x);
}

void TextClassifier::write(std::ostream& out) const {
  out << "causex-model 1\n";
  out << "spec " << spec_.describe() << '\n';
  out << "vocabulary " << vocab_.size() << ' ' << vocab_.fingerprint()
      << '\n';
  for (std::size_t i = 0; i < vocab_.size(); ++i) {
    out << vocab_.term(i) << '\t' << vocab_.frequency(vocab_.term(i)) << '\n';
  }
  if (idf_) {
    out << "idf " << idf_->n_docs << '\n';
    for (std::size_t i = 0; i < idf_->values.size(); ++i) {
      if (i > 0) out << ' ';
      out << detail::format_real(idf_->values[i], 17);
    }
    out << '\n';
  } else {
    out << "idf none\n";
  }
  if (const auto* nb_model = nb()) {
    nb_model->write(out);
  } else {
    svm()->write(out);
  }
}

namespace {

void parse_spec(const std::string& line, ClassifierSpec& spec) {
  std::istringstream in(line);
  std::string word;
  in >> word;  // "spec"
  while (in >> word) {
    auto eq = word.find('=');
    if (eq == std::string::npos) continue;
    const std::string key = word.substr(0, eq);
    const std::string val = word.substr(eq + 1);
    try {
      if (key == "classifier") {
        auto k = parse_classifier_kind(val);
        if (!k) throw Error(ErrorKind::Format, "unknown classifier " + val);
        spec.kind = *k;
      } else if (key == "scheme") {
        auto s = parse_weight_scheme(val);
        if (!s) throw Error(ErrorKind::Format, "unknown scheme " + val);
        spec.scheme = *s;
      } else if (key == "min_freq") {
        spec.min_freq = std::stoul(val);
      } else if (key == "alpha") {
        spec.alpha = std::stod(val);
      } else if (key == "C") {
        spec.C = std::stod(val);
      } else if (key == "tol") {
        spec.tol = std::stod(val);
      } else if (key == "sigma") {
        spec.sigma = std::stod(val);
      } else if (key == "poly_c") {
        spec.poly_c = std::stod(val);
      } else if (key == "poly_degree") {
        spec.poly_degree = std::stoi(val);
      }
    } catch (const std::logic_error&) {
      throw Error(ErrorKind::Format, "model: bad value for " + key);
    }
  }
}

}  // namespace

TextClassifier TextClassifier::read(std::istream& in) {
  auto fail = [](const std::string& why) {
    return Error(ErrorKind::Format, "model file: " + why);
  };
  std::string line;
  // Leading provenance comments are allowed.
  do {
    if (!std::getline(in, line)) throw fail("empty");
  } while (!line.empty() && line.front() == '#');
  if (line != "causex-model 1") throw fail("unsupported header '" + line + "'");

  TextClassifier tc;
  if (!std::getline(in, line) || line.rfind("spec ", 0) != 0) {
    throw fail("missing spec line");
  }
  parse_spec(line, tc.spec_);

  if (!std::getline(in, line) || line.rfind("vocabulary ", 0) != 0) {
    throw fail("missing vocabulary section");
  }
  std::istringstream vh(line);
  std::string tag;
  std::size_t n_terms = 0;
  std::string fingerprint;
  if (!(vh >> tag >> n_terms >> fingerprint)) throw fail("bad vocabulary line");
  std::ostringstream vocab_text;
  for (std::size_t i = 0; i < n_terms; ++i) {
    if (!std::getline(in, line)) throw fail("truncated vocabulary");
    vocab_text << line << '\n';
  }
  std::istringstream vocab_in(vocab_text.str());
  tc.vocab_ = Vocabulary::read(vocab_in);
  if (tc.vocab_.fingerprint() != fingerprint) {
    throw fail("vocabulary fingerprint does not match its terms");
  }

  if (!std::getline(in, line) || line.rfind("idf ", 0) != 0) {
    throw fail("missing idf section");
  }
  if (line != "idf none") {
    IdfVector idf;
    try {
      idf.n_docs = std::stoul(line.substr(4));
    } catch (const std::logic_error&) {
      throw fail("bad idf header");
    }
    if (!std::getline(in, line)) throw fail("missing idf values");
    std::istringstream vals(line);
    idf.values.resize(n_terms);
    for (auto& v : idf.values) {
      if (!(vals >> v)) throw fail("short idf row");
    }
    tc.idf_ = std::move(idf);
  }
  if (tc.spec_.scheme == WeightScheme::TfIdf && !tc.idf_) {
    throw fail("tfidf model without an idf section");
  }
  if (tc.spec_.kind == ClassifierKind::NaiveBayes) {
    tc.model_ = NbModel::read(in);
  } else {
    tc.model_ = SvmModel::read(in);
  }
  return tc;
}

}  // namespace causex
