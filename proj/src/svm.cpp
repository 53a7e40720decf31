// Copyright 2026 The causex Authors.
// SPDX-License-Identifier: Apache-2.0

#include "causex/svm.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>

#include "causex/error.hpp"
#include "text_util.hpp"

namespace causex {

void Kernel::validate() const {
  if (kind == KernelKind::Gaussian && !(sigma > 0.0 && std::isfinite(sigma))) {
    throw Error(ErrorKind::InvalidArgument, "gaussian sigma must be > 0");
  }
  if (kind == KernelKind::Polynomial && (degree < 1 || !std::isfinite(c))) {
    throw Error(ErrorKind::InvalidArgument,
                "polynomial degree must be >= 1 and c finite");
  }
}

std::string Kernel::describe() const {
  switch (kind) {
    case KernelKind::Linear:
      return "linear";
    case KernelKind::Gaussian:
      return "gaussian " + detail::format_real(sigma, 17);
    case KernelKind::Polynomial:
      return "polynomial " + detail::format_real(c, 17) + " " +
             std::to_string(degree);
  }
  return "unknown";
}

namespace {

double apply(const Kernel& k, double inner, double sq_dist) {
  switch (k.kind) {
    case KernelKind::Linear:
      return inner;
    case KernelKind::Gaussian:
      return std::exp(-sq_dist / k.sigma);
    case KernelKind::Polynomial:
      return std::pow(inner + k.c, k.degree);
  }
  return inner;
}

}  // namespace

double kernel_eval(const Kernel& k, const SparseVector& x,
                   const SparseVector& z) {
  if (x.dim() != z.dim()) {
    throw Error(ErrorKind::Mismatch, "kernel arguments differ in dimension");
  }
  if (k.kind == KernelKind::Gaussian) {
    return apply(k, 0.0, squared_distance(x, z));
  }
  return apply(k, dot(x, z), 0.0);
}

double kernel_eval(const Kernel& k, std::span<const double> x,
                   std::span<const double> z) {
  if (x.size() != z.size()) {
    throw Error(ErrorKind::Mismatch, "kernel arguments differ in dimension");
  }
  double inner = 0.0;
  double sq = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    inner += x[i] * z[i];
    sq += (x[i] - z[i]) * (x[i] - z[i]);
  }
  return apply(k, inner, sq);
}

namespace {

// Rows of Q = y_i y_j K_ij computed on first use.
class KernelRows {
 public:
  KernelRows(std::span<const SparseVector> rows, std::span<const double> y,
             const Kernel& k)
      : rows_(rows), y_(y), kernel_(k), cache_(rows.size()) {}

  const std::vector<double>& row(std::size_t i) {
    auto& r = cache_[i];
    if (r.empty()) {
      const std::size_t n = rows_.size();
      r.resize(n);
      for (std::size_t j = 0; j < n; ++j) {
        r[j] = y_[i] * y_[j] * kernel_eval(kernel_, rows_[i], rows_[j]);
      }
    }
    return r;
  }

 private:
  std::span<const SparseVector> rows_;
  std::span<const double> y_;
  const Kernel& kernel_;
  std::vector<std::vector<double>> cache_;
};

constexpr double kTau = 1e-12;

}  // namespace

double dual_objective(std::span<const SparseVector> rows,
                      std::span<const Label> labels, const Kernel& kernel,
                      std::span<const double> alphas) {
  const std::size_t n = rows.size();
  double linear = 0.0;
  double quad = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    linear += alphas[i];
    if (alphas[i] == 0.0) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (alphas[j] == 0.0) continue;
      quad += alphas[i] * alphas[j] * to_int(labels[i]) * to_int(labels[j]) *
              kernel_eval(kernel, rows[i], rows[j]);
    }
  }
  return linear - 0.5 * quad;
}

SvmModel train_svm(std::span<const SparseVector> rows,
                   std::span<const Label> labels, const Kernel& kernel,
                   const SvmOptions& options, SvmTrainStats* stats) {
  kernel.validate();
  const std::size_t n = rows.size();
  if (labels.size() != n) {
    throw Error(ErrorKind::InvalidArgument,
                "training rows and labels differ in length");
  }
  if (!(options.C > 0.0) || !std::isfinite(options.C)) {
    throw Error(ErrorKind::InvalidArgument, "C must be a positive real");
  }
  if (!(options.tol > 0.0)) {
    throw Error(ErrorKind::InvalidArgument, "tol must be positive");
  }
  const bool has_pos =
      std::find(labels.begin(), labels.end(), Label::Causal) != labels.end();
  const bool has_neg = std::find(labels.begin(), labels.end(),
                                 Label::NonCausal) != labels.end();
  if (!has_pos || !has_neg) {
    throw Error(ErrorKind::InvalidArgument, "degenerate training labels");
  }
  const std::size_t dim = rows.front().dim();
  for (const auto& r : rows) {
    if (r.dim() != dim) {
      throw Error(ErrorKind::Mismatch, "training rows differ in dimension");
    }
  }

  const double C = options.C;
  std::vector<double> y(n);
  for (std::size_t i = 0; i < n; ++i) y[i] = to_int(labels[i]);
  KernelRows Q(rows, y, kernel);
  std::vector<double> qd(n);
  for (std::size_t i = 0; i < n; ++i) {
    qd[i] = kernel_eval(kernel, rows[i], rows[i]);
  }

  std::vector<double> alpha(n, 0.0);
  std::vector<double> grad(n, -1.0);  // G = Q alpha - e
  auto in_up = [&](std::size_t t) {
    return (y[t] > 0 && alpha[t] < C) || (y[t] < 0 && alpha[t] > 0);
  };
  auto in_low = [&](std::size_t t) {
    return (y[t] > 0 && alpha[t] > 0) || (y[t] < 0 && alpha[t] < C);
  };

  const std::size_t max_iter =
      options.max_iterations > 0 ? options.max_iterations
                                 : std::max<std::size_t>(1000000, 1000 * n);
  const std::size_t stall_limit = 10 * n;
  std::size_t stalled = 0;
  double objective = 0.0;
  std::size_t iter = 0;
  double gap = std::numeric_limits<double>::infinity();
  double m_up = 0.0;
  double m_low = 0.0;

  for (;;) {
    std::size_t i = n;
    std::size_t j = n;
    m_up = -std::numeric_limits<double>::infinity();
    m_low = std::numeric_limits<double>::infinity();
    for (std::size_t t = 0; t < n; ++t) {
      const double v = -y[t] * grad[t];
      if (in_up(t) && v > m_up) {
        m_up = v;
        i = t;
      }
      if (in_low(t) && v < m_low) {
        m_low = v;
        j = t;
      }
    }
    gap = m_up - m_low;
    if (i == n || j == n || gap <= options.tol) break;
    if (iter >= max_iter || stalled >= stall_limit) {
      throw ConvergenceError(
          "SMO did not converge after " + std::to_string(iter) +
              " iterations; KKT violation " + detail::format_real(gap, 6),
          gap);
    }
    ++iter;

    const std::vector<double>& qi = Q.row(i);
    const std::vector<double>& qj = Q.row(j);
    const double old_i = alpha[i];
    const double old_j = alpha[j];
    if (y[i] != y[j]) {
      double quad = qd[i] + qd[j] + 2.0 * qi[j];
      if (quad <= 0) quad = kTau;
      const double delta = (-grad[i] - grad[j]) / quad;
      const double diff = alpha[i] - alpha[j];
      alpha[i] += delta;
      alpha[j] += delta;
      if (diff > 0) {
        if (alpha[j] < 0) {
          alpha[j] = 0;
          alpha[i] = diff;
        }
      } else if (alpha[i] < 0) {
        alpha[i] = 0;
        alpha[j] = -diff;
      }
      if (diff > 0) {
        if (alpha[i] > C) {
          alpha[i] = C;
          alpha[j] = C - diff;
        }
      } else if (alpha[j] > C) {
        alpha[j] = C;
        alpha[i] = C + diff;
      }
    } else {
      double quad = qd[i] + qd[j] - 2.0 * qi[j];
      if (quad <= 0) quad = kTau;
      const double delta = (grad[i] - grad[j]) / quad;
      const double sum = alpha[i] + alpha[j];
      alpha[i] -= delta;
      alpha[j] += delta;
      if (sum > C) {
        if (alpha[i] > C) {
          alpha[i] = C;
          alpha[j] = sum - C;
        }
      } else if (alpha[j] < 0) {
        alpha[j] = 0;
        alpha[i] = sum;
      }
      if (sum > C) {
        if (alpha[j] > C) {
          alpha[j] = C;
          alpha[i] = sum - C;
        }
      } else if (alpha[i] < 0) {
        alpha[i] = 0;
        alpha[j] = sum;
      }
    }

    const double di = alpha[i] - old_i;
    const double dj = alpha[j] - old_j;
    // Objective change of a pair step: -(G_i di + G_j dj) - 1/2 d^T Q_B d.
    const double gain = -(grad[i] * di + grad[j] * dj) -
                        0.5 * (qi[i] * di * di + 2.0 * qi[j] * di * dj +
                               qj[j] * dj * dj);
    objective += gain;
    if (gain <= 1e-15 * std::max(1.0, std::abs(objective))) {
      ++stalled;
    } else {
      stalled = 0;
    }
    for (std::size_t t = 0; t < n; ++t) {
      grad[t] += qi[t] * di + qj[t] * dj;
    }
  }

  // Bias: mean of -y G over free vectors; otherwise the hard-margin midpoint
  // rule, kept inside the interval on which every KKT condition holds.
  double bias = 0.0;
  std::size_t n_free = 0;
  double free_sum = 0.0;
  for (std::size_t t = 0; t < n; ++t) {
    if (alpha[t] > 0 && alpha[t] < C) {
      free_sum += -y[t] * grad[t];
      ++n_free;
    }
  }
  if (n_free > 0) {
    bias = free_sum / static_cast<double>(n_free);
  } else {
    double min_pos = std::numeric_limits<double>::infinity();
    double max_neg = -std::numeric_limits<double>::infinity();
    for (std::size_t t = 0; t < n; ++t) {
      const double g = y[t] * (grad[t] + 1.0);  // sum_j alpha_j y_j K_tj
      if (y[t] > 0) {
        min_pos = std::min(min_pos, g);
      } else {
        max_neg = std::max(max_neg, g);
      }
    }
    bias = -0.5 * (min_pos + max_neg);
    if (std::isfinite(m_up) && std::isfinite(m_low)) {
      bias = std::clamp(bias, std::min(m_up, m_low), std::max(m_up, m_low));
    }
  }

  SvmModel model;
  model.kernel_ = kernel;
  model.C_ = C;
  model.bias_ = bias;
  model.dim_ = dim;
  for (std::size_t t = 0; t < n; ++t) {
    if (alpha[t] > 0) {
      model.support_.push_back(rows[t]);
      model.sv_labels_.push_back(labels[t]);
      model.alphas_.push_back(alpha[t]);
    }
  }
  if (stats != nullptr) {
    stats->iterations = iter;
    stats->kkt_gap = gap;
    double obj = 0.0;
    for (std::size_t t = 0; t < n; ++t) {
      obj += alpha[t] - 0.5 * alpha[t] * (grad[t] + 1.0);
    }
    stats->dual_objective = obj;
    stats->alphas = alpha;
  }
  return model;
}

double SvmModel::decision_value(const SparseVector& x) const {
  if (x.dim() != dim_) {
    throw Error(ErrorKind::Mismatch,
                "feature vector length does not match the model");
  }
  double f = bias_;
  for (std::size_t i = 0; i < support_.size(); ++i) {
    f += alphas_[i] * to_int(sv_labels_[i]) *
         kernel_eval(kernel_, support_[i], x);
  }
  return f;
}

Label SvmModel::predict(const SparseVector& x) const {
  return decision_value(x) >= 0.0 ? Label::Causal : Label::NonCausal;
}

std::vector<double> SvmModel::primal_weights() const {
  std::vector<double> w(dim_, 0.0);
  for (std::size_t i = 0; i < support_.size(); ++i) {
    const double coef = alphas_[i] * to_int(sv_labels_[i]);
    for (const auto& e : support_[i].entries()) w[e.col] += coef * e.value;
  }
  return w;
}

void SvmModel::write(std::ostream& out) const {
  out << "svm 1\n";
  out << "kernel " << kernel_.describe() << '\n';
  out << "C " << detail::format_real(C_, 17) << '\n';
  out << "bias " << detail::format_real(bias_, 17) << '\n';
  out << "dim " << dim_ << " sv " << support_.size() << '\n';
  for (std::size_t i = 0; i < support_.size(); ++i) {
    out << to_int(sv_labels_[i]) << ' ' << detail::format_real(alphas_[i], 17);
    for (const auto& e : support_[i].entries()) {
      out << ' ' << e.col << ':' << detail::format_real(e.value, 17);
    }
    out << '\n';
  }
}

SvmModel SvmModel::read(std::istream& in) {
  auto fail = [](const std::string& why) {
    return Error(ErrorKind::Format, "svm model: " + why);
  };
  std::string line;
  auto expect_line = [&](const char* what) {
    if (!std::getline(in, line)) throw fail(std::string("missing ") + what);
    return std::istringstream(line);
  };
  SvmModel m;
  std::string tag;
  int version = 0;
  if (!(expect_line("header") >> tag >> version) || tag != "svm" ||
      version != 1) {
    throw fail("malformed header");
  }
  {
    auto ks = expect_line("kernel");
    std::string kind;
    if (!(ks >> tag >> kind) || tag != "kernel") throw fail("bad kernel line");
    if (kind == "linear") {
      m.kernel_ = Kernel::linear();
    } else if (kind == "gaussian") {
      double s = 0;
      if (!(ks >> s)) throw fail("bad gaussian sigma");
      m.kernel_ = Kernel::gaussian(s);
    } else if (kind == "polynomial") {
      double c = 0;
      int d = 0;
      if (!(ks >> c >> d)) throw fail("bad polynomial parameters");
      m.kernel_ = Kernel::polynomial(c, d);
    } else {
      throw fail("unknown kernel '" + kind + "'");
    }
    m.kernel_.validate();
  }
  if (!(expect_line("C") >> tag >> m.C_) || tag != "C") throw fail("bad C");
  if (!(expect_line("bias") >> tag >> m.bias_) || tag != "bias") {
    throw fail("bad bias");
  }
  std::size_t n_sv = 0;
  std::string sv_tag;
  if (!(expect_line("dim") >> tag >> m.dim_ >> sv_tag >> n_sv) ||
      tag != "dim" || sv_tag != "sv") {
    throw fail("bad dim line");
  }
  for (std::size_t i = 0; i < n_sv; ++i) {
    auto row = expect_line("support vector");
    int label = 0;
    double a = 0;
    if (!(row >> label >> a) || (label != 1 && label != -1)) {
      throw fail("bad support vector " + std::to_string(i));
    }
    SparseVector v(m.dim_);
    std::string pair;
    while (row >> pair) {
      auto colon = pair.find(':');
      if (colon == std::string::npos) throw fail("bad coordinate '" + pair + "'");
      try {
        v.push(static_cast<std::uint32_t>(std::stoul(pair.substr(0, colon))),
               std::stod(pair.substr(colon + 1)));
      } catch (const std::exception&) {
        throw fail("bad coordinate '" + pair + "'");
      }
    }
    m.support_.push_back(std::move(v));
    m.sv_labels_.push_back(label == 1 ? Label::Causal : Label::NonCausal);
    m.alphas_.push_back(a);
  }
  return m;
}

}  // namespace causex
