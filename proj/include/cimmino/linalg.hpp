#pragma once

// Small dense linear algebra: immutable vectors and row-major matrices,
// plus a cyclic Jacobi eigensolver for symmetric input.

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace cimmino {

/// Finite real vector. Immutable after construction.
class Vector {
 public:
  Vector() = default;
  explicit Vector(std::vector<double> values);
  Vector(std::initializer_list<double> values);

  static Vector zeros(std::size_t n);

  std::size_t size() const noexcept { return values_.size(); }
  bool empty() const noexcept { return values_.empty(); }
  double operator[](std::size_t i) const noexcept { return values_[i]; }
  double at(std::size_t i) const;

  std::span<const double> values() const noexcept { return values_; }
  auto begin() const noexcept { return values_.begin(); }
  auto end() const noexcept { return values_.end(); }

  bool operator==(const Vector&) const = default;

 private:
  std::vector<double> values_;
};

Vector operator+(const Vector& u, const Vector& v);
Vector operator-(const Vector& u, const Vector& v);
Vector operator*(double alpha, const Vector& v);

/// Euclidean inner product.
double inner(const Vector& u, const Vector& v);
/// Euclidean norm, scaled to avoid overflow for large entries.
double norm2(const Vector& v);
double max_abs(const Vector& v) noexcept;

/// Row-major dense matrix with finite entries. Immutable after construction.
class DenseMatrix {
 public:
  DenseMatrix(std::size_t rows, std::size_t cols, std::vector<double> entries);

  static DenseMatrix identity(std::size_t n);
  static DenseMatrix from_rows(std::initializer_list<std::initializer_list<double>> rows);
  static DenseMatrix from_rows(const std::vector<std::vector<double>>& rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  double operator()(std::size_t i, std::size_t j) const noexcept {
    return entries_[i * cols_ + j];
  }
  std::span<const double> row(std::size_t i) const noexcept {
    return std::span<const double>(entries_).subspan(i * cols_, cols_);
  }
  std::span<const double> entries() const noexcept { return entries_; }

  DenseMatrix transpose() const;
  double max_abs() const noexcept;
  double frobenius() const noexcept;

  bool operator==(const DenseMatrix&) const = default;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<double> entries_;
};

DenseMatrix operator+(const DenseMatrix& a, const DenseMatrix& b);
DenseMatrix operator-(const DenseMatrix& a, const DenseMatrix& b);
DenseMatrix operator*(double alpha, const DenseMatrix& m);
DenseMatrix multiply(const DenseMatrix& a, const DenseMatrix& b);

Vector matvec(const DenseMatrix& m, const Vector& v);

/// Largest |B_ij - B_ji|; zero for exactly symmetric input.
double asymmetry(const DenseMatrix& b);

struct EigenDecomposition {
  /// Ascending: eigenvalues[0] <= ... <= eigenvalues[n-1].
  std::vector<double> eigenvalues;
  /// Orthogonal; column i pairs with eigenvalues[i].
  DenseMatrix eigenvectors;
  int sweeps = 0;
};

inline constexpr double kDefaultEigenTolerance = 1e-12;
inline constexpr int kMaxJacobiSweeps = 100;

/// Cyclic (row-order) Jacobi diagonalization of a symmetric matrix.
///
/// The input must be symmetric to within 1e-12 * (1 + max|B|); it is then
/// symmetrized as (B + B^T) / 2. Sweeps stop once the off-diagonal
/// Frobenius norm is at most tol * ||B||_F. Throws DimensionError for a
/// non-square matrix, DomainError for asymmetric input or tol <= 0, and
/// EigenConvergenceError after max_sweeps sweeps.
EigenDecomposition symmetric_eigen(const DenseMatrix& b,
                                   double tol = kDefaultEigenTolerance,
                                   int max_sweeps = kMaxJacobiSweeps);

}  // namespace cimmino
