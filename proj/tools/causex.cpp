// Copyright 2026 The causex Authors.
// SPDX-License-Identifier: Apache-2.0

// causex command-line tool. Talks to the library only through causex.h.

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "causex/causex.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitConvergence = 3;
constexpr int kExitInternal = 1;

struct RunConfig {
  std::string command;
  std::vector<std::string> inputs;
  std::string output = "-";
  std::string out_dir = ".";
  std::string model;
  std::string matrix;
  std::string expert;
  std::string config;
  std::string stoplist;
  std::string lexicon;
  std::string classifier = "nb";
  std::string scheme = "tf";
  std::string param = "sigma";
  std::vector<double> values;
  double alpha = 1.0;
  double C = 10.0;
  double sigma = 16.0;
  double poly_c = 1.0;
  int poly_degree = 2;
  double tol = 1e-3;
  double train_fraction = 0.7;
  std::size_t min_freq = 5;
  std::size_t k = 10;
  std::size_t jobs = 1;
  std::uint64_t seed = 0;
  bool shared_vocab = false;
  bool no_stratify = false;
  bool strict_ambiguous = false;
};

// Failure from a library call, carrying the status for the exit code.
struct Failure {
  cx_status status;
  std::string message;
};

void check(cx_status s) {
  if (s != CX_OK) throw Failure{s, cx_last_error()};
}

int exit_code(cx_status s) {
  switch (s) {
    case CX_OK:
      return kExitOk;
    case CX_ERR_CONVERGENCE:
      return kExitConvergence;
    case CX_ERR_INTERNAL:
      return kExitInternal;
    default:
      return kExitInput;
  }
}

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

std::string provenance(const RunConfig& c) {
  std::string h = "# causex ";
  h += cx_version();
  h += " command=" + c.command;
  h += " rng=" + std::string(cx_rng_algorithm());
  h += " seed=" + std::to_string(c.seed);
  if (!c.config.empty()) h += " config=" + c.config;
  h += " stoplist=" + (c.stoplist.empty() ? std::string("builtin") : c.stoplist);
  h += " lexicon=" + (c.lexicon.empty() ? std::string("builtin") : c.lexicon);
  if (c.command == "extract" || c.command == "eval-extract") {
    h += " strict_ambiguous=" + std::to_string(c.strict_ambiguous ? 1 : 0);
  } else if (c.command == "predict") {
    h += " model=" + c.model;
    if (!c.matrix.empty()) h += " matrix=" + c.matrix;
  } else {
    h += " classifier=" + c.classifier + " scheme=" + c.scheme;
    h += " alpha=" + num(c.alpha) + " C=" + num(c.C) + " sigma=" + num(c.sigma);
    h += " poly_c=" + num(c.poly_c) +
         " poly_degree=" + std::to_string(c.poly_degree);
    h += " tol=" + num(c.tol) + " min_freq=" + std::to_string(c.min_freq);
  }
  if (c.command == "cv" || c.command == "tune") {
    h += " k=" + std::to_string(c.k);
    h += " stratified=" + std::to_string(c.no_stratify ? 0 : 1);
    h += " shared_vocab=" + std::to_string(c.shared_vocab ? 1 : 0);
  }
  if (c.command == "preprocess") h += " train_fraction=" + num(c.train_fraction);
  if (c.command == "tune") h += " param=" + c.param;
  for (const auto& in : c.inputs) h += " input=" + in;
  if (!c.expert.empty()) h += " expert=" + c.expert;
  return h;
}

// Owning wrappers for the C handles.
template <typename T, void (*Free)(T*)>
struct Handle {
  T* p = nullptr;
  Handle() = default;
  Handle(const Handle&) = delete;
  Handle& operator=(const Handle&) = delete;
  ~Handle() { Free(p); }
  T** out() { return &p; }
  T* get() const { return p; }
};

using Dataset = Handle<cx_dataset, cx_dataset_free>;
using Lexicon = Handle<cx_lexicon, cx_lexicon_free>;
using Stoplist = Handle<cx_stoplist, cx_stoplist_free>;
using Model = Handle<cx_model, cx_model_free>;
using CvResult = Handle<cx_cv_result, cx_cv_free>;
using GridResult = Handle<cx_grid_result, cx_grid_free>;

const char* opt_path(const std::string& s) {
  return s.empty() ? nullptr : s.c_str();
}

cx_spec make_spec(const RunConfig& c) {
  cx_spec spec;
  cx_spec_init(&spec);
  check(cx_parse_classifier(c.classifier.c_str(), &spec.classifier));
  check(cx_parse_scheme(c.scheme.c_str(), &spec.scheme));
  spec.alpha = c.alpha;
  spec.C = c.C;
  spec.sigma = c.sigma;
  spec.poly_c = c.poly_c;
  spec.poly_degree = c.poly_degree;
  spec.tol = c.tol;
  spec.min_freq = c.min_freq;
  return spec;
}

cx_cv_options make_cv(const RunConfig& c) {
  cx_cv_options o;
  cx_cv_options_init(&o);
  o.k = c.k;
  o.seed = c.seed;
  o.jobs = c.jobs;
  o.stratified = c.no_stratify ? 0 : 1;
  o.shared_vocab = c.shared_vocab ? 1 : 0;
  return o;
}

void load_text_resources(const RunConfig& c, Lexicon& lex, Stoplist& stops) {
  check(cx_lexicon_load(opt_path(c.lexicon), lex.out()));
  check(cx_stoplist_load(opt_path(c.stoplist), lex.get(), stops.out()));
}

const std::string& single_input(const RunConfig& c) {
  if (c.inputs.size() != 1) {
    throw Failure{CX_ERR_INVALID_ARGUMENT,
                  c.command + " expects exactly one labeled TSV input"};
  }
  return c.inputs.front();
}

void cmd_preprocess(const RunConfig& c) {
  Lexicon lex;
  Stoplist stops;
  load_text_resources(c, lex, stops);
  Dataset all, train, test;
  check(cx_dataset_load(single_input(c).c_str(), all.out()));
  check(cx_dataset_split(all.get(), c.train_fraction, c.seed, train.out(),
                         test.out()));
  cx_spec spec = make_spec(c);
  const std::filesystem::path dir(c.out_dir);
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) {
    throw Failure{CX_ERR_IO, "cannot create " + dir.string()};
  }
  const std::string header = provenance(c);
  const auto path = [&](const char* name) { return (dir / name).string(); };
  check(cx_dataset_write(train.get(), path("train.tsv").c_str(), header.c_str()));
  check(cx_dataset_write(test.get(), path("test.tsv").c_str(), header.c_str()));
  cx_pipeline_counts counts{};
  check(cx_preprocess(train.get(), test.get(), stops.get(), spec.scheme,
                      c.min_freq, path("vocabulary.tsv").c_str(),
                      path("train.mtx").c_str(), path("test.mtx").c_str(),
                      header.c_str(), &counts));
  std::printf("%s\nstage\tterms\nraw\t%zu\npost_stopword\t%zu\nvocabulary\t%zu\n",
              header.c_str(), counts.raw_tokens, counts.content_tokens,
              counts.vocabulary);
}

void cmd_train(const RunConfig& c) {
  Lexicon lex;
  Stoplist stops;
  load_text_resources(c, lex, stops);
  Dataset ds;
  check(cx_dataset_load(single_input(c).c_str(), ds.out()));
  const cx_spec spec = make_spec(c);
  Model model;
  check(cx_model_train(ds.get(), stops.get(), &spec, model.out()));
  check(cx_model_save(model.get(), c.output.c_str(), provenance(c).c_str()));
}

void cmd_predict(const RunConfig& c) {
  if (c.model.empty()) {
    throw Failure{CX_ERR_INVALID_ARGUMENT, "predict requires --model"};
  }
  Model model;
  check(cx_model_load(c.model.c_str(), model.out()));
  const std::string header = provenance(c);
  if (!c.matrix.empty()) {
    if (!c.inputs.empty()) {
      throw Failure{CX_ERR_INVALID_ARGUMENT,
                    "give either --matrix or a labeled TSV, not both"};
    }
    check(cx_model_predict_matrix(model.get(), c.matrix.c_str(),
                                  c.output.c_str(), header.c_str()));
    return;
  }
  Lexicon lex;
  Stoplist stops;
  load_text_resources(c, lex, stops);
  Dataset ds;
  check(cx_dataset_load(single_input(c).c_str(), ds.out()));
  check(cx_model_predict_dataset(model.get(), ds.get(), stops.get(),
                                 c.output.c_str(), header.c_str(), nullptr));
}

void cmd_cv(const RunConfig& c) {
  Lexicon lex;
  Stoplist stops;
  load_text_resources(c, lex, stops);
  Dataset ds;
  check(cx_dataset_load(single_input(c).c_str(), ds.out()));
  const cx_spec spec = make_spec(c);
  const cx_cv_options opts = make_cv(c);
  CvResult cv;
  check(cx_cross_validate(ds.get(), stops.get(), &spec, &opts, cv.out()));
  check(cx_cv_write_report(cv.get(), c.output.c_str(), provenance(c).c_str()));
}

void cmd_tune(RunConfig c) {
  if (c.values.empty()) {
    if (c.param == "C" || c.param == "c") {
      c.values = {0.01, 0.1, 1, 10, 100};
    } else if (c.param == "sigma") {
      c.values = {8, 16, 32, 64, 128};
    } else {
      throw Failure{CX_ERR_INVALID_ARGUMENT,
                    "--values is required for parameter " + c.param};
    }
  }
  Lexicon lex;
  Stoplist stops;
  load_text_resources(c, lex, stops);
  Dataset ds;
  check(cx_dataset_load(single_input(c).c_str(), ds.out()));
  const cx_spec spec = make_spec(c);
  const cx_cv_options opts = make_cv(c);
  GridResult grid;
  check(cx_grid_search(ds.get(), stops.get(), &spec, c.param.c_str(),
                       c.values.data(), c.values.size(), &opts, grid.out()));
  std::string header = provenance(c) + " values=";
  for (std::size_t i = 0; i < c.values.size(); ++i) {
    header += (i ? "," : "") + num(c.values[i]);
  }
  check(cx_grid_write_report(grid.get(), c.output.c_str(), header.c_str()));
}

std::vector<const char*> c_strings(const std::vector<std::string>& v) {
  std::vector<const char*> out;
  for (const auto& s : v) out.push_back(s.c_str());
  return out;
}

void cmd_extract(const RunConfig& c) {
  if (c.inputs.empty()) {
    throw Failure{CX_ERR_INVALID_ARGUMENT, "extract needs report files"};
  }
  Lexicon lex;
  check(cx_lexicon_load(opt_path(c.lexicon), lex.out()));
  const auto paths = c_strings(c.inputs);
  check(cx_extract(paths.data(), paths.size(), lex.get(),
                   c.strict_ambiguous ? 1 : 0, c.output.c_str(),
                   provenance(c).c_str(), nullptr));
}

void cmd_eval_extract(const RunConfig& c) {
  if (c.inputs.empty()) {
    throw Failure{CX_ERR_INVALID_ARGUMENT, "eval-extract needs report files"};
  }
  if (c.expert.empty()) {
    throw Failure{CX_ERR_INVALID_ARGUMENT, "eval-extract requires --expert"};
  }
  Lexicon lex;
  check(cx_lexicon_load(opt_path(c.lexicon), lex.out()));
  const auto paths = c_strings(c.inputs);
  check(cx_eval_extract(paths.data(), paths.size(), c.expert.c_str(),
                        lex.get(), c.strict_ambiguous ? 1 : 0,
                        c.output.c_str(), provenance(c).c_str(), nullptr));
}

}  // namespace

int main(int argc, char** argv) {
  RunConfig cfg;
  CLI::App app{"Causal sentence classification and extraction", "causex"};
  app.set_version_flag("--version", std::string(cx_version()));
  app.set_config("--config", "", "Flat key=value configuration file");
  app.require_subcommand(1);
  app.fallthrough();

  // All settings live on the root, where a flat config file can reach them.
  app.add_option("--seed", cfg.seed, "Random seed");
  app.add_option("--jobs", cfg.jobs, "Concurrent fold workers")
      ->check(CLI::PositiveNumber);
  app.add_option("-o,--output", cfg.output, "Output path, - for stdout");
  app.add_option("--out-dir,--out_dir", cfg.out_dir,
                 "Directory for preprocess outputs");
  app.add_option("--stoplist", cfg.stoplist, "Stoplist file")
      ->check(CLI::ExistingFile);
  app.add_option("--lexicon", cfg.lexicon, "Connective lexicon file")
      ->check(CLI::ExistingFile);
  app.add_option("--min-freq,--min_freq", cfg.min_freq,
                 "Keep terms occurring more than this many times");
  app.add_option("--scheme", cfg.scheme, "boolean, tf or tfidf");
  app.add_option("--classifier", cfg.classifier,
                 "nb, svm-linear, svm-gaussian or svm-poly");
  app.add_option("--alpha", cfg.alpha, "Laplace smoothing");
  app.add_option("--C,-C", cfg.C, "SVM box constraint");
  app.add_option("--sigma", cfg.sigma, "Gaussian kernel width");
  app.add_option("--poly-c,--poly_c", cfg.poly_c, "Polynomial kernel offset");
  app.add_option("--poly-degree,--poly_degree", cfg.poly_degree,
                 "Polynomial kernel degree");
  app.add_option("--tol", cfg.tol, "SMO stopping tolerance");
  app.add_option("-k,--k", cfg.k, "Number of folds");
  app.add_flag("--shared-vocab,--shared_vocab", cfg.shared_vocab,
               "Build vocabulary and IDF once on the whole dataset");
  app.add_flag("--no-stratify,--no_stratify", cfg.no_stratify,
               "Assign folds without regard to labels");
  app.add_flag("--strict-ambiguous,--strict_ambiguous", cfg.strict_ambiguous,
               "Require three following tokens after as/since/so");
  app.add_option("--train-fraction,--train_fraction", cfg.train_fraction,
                 "Share of each class in the training split")
      ->check(CLI::Range(0.0, 1.0));
  app.add_option("--model", cfg.model, "Model file");
  app.add_option("--matrix", cfg.matrix, "Matrix dump to classify");
  app.add_option("--expert", cfg.expert, "Expert sentence id file");
  app.add_option("--param", cfg.param,
                 "Tuned parameter: C, sigma, alpha, poly_c, poly_degree");
  app.add_option("--values", cfg.values, "Grid values")->delimiter(',');

  const std::map<std::string, std::string> commands = {
      {"preprocess", "Split, build vocabulary and write matrices"},
      {"train", "Train a classifier on a labeled TSV"},
      {"predict", "Label sentences with a trained model"},
      {"cv", "k-fold cross-validation report"},
      {"tune", "Grid search over one hyperparameter"},
      {"extract", "Extract causal sentences from report text files"},
      {"eval-extract", "Score extraction against expert-marked sentences"},
  };
  for (const auto& [name, help] : commands) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("inputs", cfg.inputs, "Input files");
    sub->callback([&cfg, name = name] { cfg.command = name; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }
  if (cfg.config.empty()) {
    if (auto* opt = app.get_config_ptr(); opt != nullptr && opt->count() > 0) {
      cfg.config = opt->as<std::string>();
    }
  }

  try {
    if (cfg.command == "preprocess") {
      cmd_preprocess(cfg);
    } else if (cfg.command == "train") {
      cmd_train(cfg);
    } else if (cfg.command == "predict") {
      cmd_predict(cfg);
    } else if (cfg.command == "cv") {
      cmd_cv(cfg);
    } else if (cfg.command == "tune") {
      cmd_tune(cfg);
    } else if (cfg.command == "extract") {
      cmd_extract(cfg);
    } else if (cfg.command == "eval-extract") {
      cmd_eval_extract(cfg);
    }
  } catch (const Failure& f) {
    std::fprintf(stderr, "causex %s: %s\n", cfg.command.c_str(),
                 f.message.c_str());
    return exit_code(f.status);
  }
  return kExitOk;
}
