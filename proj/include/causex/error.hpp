// Copyright 2026 The causex Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace causex {

enum class ErrorKind {
  InvalidArgument,
  Io,
  Format,
  Convergence,
  Mismatch,
};

// Base exception for every failure raised by the library. The kind maps
// one-to-one onto a cx_status code at the C boundary.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

// Raised by the SVM solver; carries the largest KKT violation seen at exit.
class ConvergenceError : public Error {
 public:
  ConvergenceError(const std::string& what, double violation)
      : Error(ErrorKind::Convergence, what), violation_(violation) {}

  double violation() const noexcept { return violation_; }

 private:
  double violation_;
};

}  // namespace causex
