#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace cimmino {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operand shapes do not agree (matvec, inner, system/weight lengths).
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// An argument is outside its admissible domain: non-finite entries,
/// non-positive weights or masses, zero rows, invalid tolerances.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Jacobi sweeps hit the cap before the off-diagonal norm fell below
/// tolerance.
class EigenConvergenceError : public Error {
 public:
  EigenConvergenceError(double off_diagonal_norm, int sweeps);

  double off_diagonal_norm() const noexcept { return off_diagonal_norm_; }
  int sweeps() const noexcept { return sweeps_; }

 private:
  double off_diagonal_norm_;
  int sweeps_;
};

/// B_w = A^T D_w A is (numerically) singular, i.e. det A = 0 for the
/// purposes of the spectral analysis. Carries the eigenvalue estimates.
class SingularSystemError : public Error {
 public:
  explicit SingularSystemError(std::vector<double> eigenvalues);

  const std::vector<double>& eigenvalues() const noexcept { return eigenvalues_; }

 private:
  std::vector<double> eigenvalues_;
};

}  // namespace cimmino
