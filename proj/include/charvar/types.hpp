#pragma once

#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace charvar {

using Complex = std::complex<double>;
using CMat = Eigen::MatrixXcd;
using CVec = Eigen::VectorXcd;

/// Base of every error raised by the library. `code()` is a short stable
/// identifier used in the CLI's machine-readable error output.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& what)
      : std::runtime_error(what), code_(std::move(code)) {}
  const std::string& code() const noexcept { return code_; }

 private:
  std::string code_;
};

/// Malformed input: wrong shapes, bad group strings, out-of-range parameters.
class ValidationError : public Error {
 public:
  explicit ValidationError(const std::string& what) : Error("validation", what) {}
};

/// A matrix fails a group's (or Lie algebra's) defining equations.
class MembershipError : public Error {
 public:
  MembershipError(const std::string& what, double residual)
      : Error("membership", what), residual_(residual) {}
  double residual() const noexcept { return residual_; }

 private:
  double residual_;
};

/// Input off the domain of a numerical routine (non-Hermitian, non-positive
/// spectrum, singular matrix).
class NumericalError : public Error {
 public:
  explicit NumericalError(const std::string& what) : Error("numerical", what) {}
};

}  // namespace charvar
