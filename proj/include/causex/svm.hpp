// Copyright 2026 The causex Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "causex/corpus.hpp"
#include "causex/vectorize.hpp"

namespace causex {

enum class KernelKind { Linear, Gaussian, Polynomial };

struct Kernel {
  KernelKind kind = KernelKind::Linear;
  double sigma = 16.0;  // Gaussian width; exp(-|x - z|^2 / sigma)
  double c = 1.0;       // polynomial offset; (<x, z> + c)^degree
  int degree = 2;

  static Kernel linear() { return {}; }
  static Kernel gaussian(double sigma) {
    return {KernelKind::Gaussian, sigma, 1.0, 2};
  }
  static Kernel polynomial(double c, int degree) {
    return {KernelKind::Polynomial, 16.0, c, degree};
  }

  // Throws InvalidArgument unless sigma > 0 and degree >= 1.
  void validate() const;
  std::string describe() const;
};

double kernel_eval(const Kernel& k, const SparseVector& x,
                   const SparseVector& z);
double kernel_eval(const Kernel& k, std::span<const double> x,
                   std::span<const double> z);

struct SvmOptions {
  double C = 10.0;
  double tol = 1e-3;
  // Hard cap on SMO pair updates; 0 picks max(10^6, 1000 n).
  std::size_t max_iterations = 0;
};

struct SvmTrainStats {
  std::size_t iterations = 0;
  // max over I_up of -y G minus min over I_low of -y G at exit.
  double kkt_gap = 0.0;
  double dual_objective = 0.0;
  // Multiplier of every training row, including zeros.
  std::vector<double> alphas;
};

class SvmModel {
 public:
  SvmModel() = default;

  const Kernel& kernel() const { return kernel_; }
  double C() const { return C_; }
  double bias() const { return bias_; }
  std::size_t dim() const { return dim_; }
  std::size_t n_support() const { return support_.size(); }
  const std::vector<SparseVector>& support_vectors() const { return support_; }
  const std::vector<double>& alphas() const { return alphas_; }
  const std::vector<Label>& sv_labels() const { return sv_labels_; }

  // f(x) = sum_i alpha_i y_i K(sv_i, x) + b
  double decision_value(const SparseVector& x) const;
  // +1 iff f(x) >= 0.
  Label predict(const SparseVector& x) const;

  // w = sum_i alpha_i y_i sv_i; meaningful for the linear kernel only.
  std::vector<double> primal_weights() const;

  void write(std::ostream& out) const;
  static SvmModel read(std::istream& in);

  friend SvmModel train_svm(std::span<const SparseVector> rows,
                            std::span<const Label> labels,
                            const Kernel& kernel, const SvmOptions& options,
                            SvmTrainStats* stats);

 private:
  Kernel kernel_;
  double C_ = 10.0;
  double bias_ = 0.0;
  std::size_t dim_ = 0;
  std::vector<SparseVector> support_;
  std::vector<Label> sv_labels_;
  std::vector<double> alphas_;
};

// Soft-margin dual solved by SMO with maximal-violating-pair selection.
// Throws ConvergenceError when the iteration cap is reached or the dual
// objective stalls for 10 n consecutive updates.
SvmModel train_svm(std::span<const SparseVector> rows,
                   std::span<const Label> labels, const Kernel& kernel,
                   const SvmOptions& options = {},
                   SvmTrainStats* stats = nullptr);

inline SvmModel train_svm(const DocTermMatrix& matrix,
                          std::span<const Label> labels, const Kernel& kernel,
                          const SvmOptions& options = {},
                          SvmTrainStats* stats = nullptr) {
  return train_svm(matrix.rows, labels, kernel, options, stats);
}

// W(alpha) = sum_i alpha_i - 1/2 sum_ij alpha_i alpha_j y_i y_j K(x_i, x_j)
double dual_objective(std::span<const SparseVector> rows,
                      std::span<const Label> labels, const Kernel& kernel,
                      std::span<const double> alphas);

inline Label predict_svm(const SvmModel& model, const SparseVector& x) {
  return model.predict(x);
}

}  // namespace causex
