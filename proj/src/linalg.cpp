#include "cimmino/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <sstream>
#include <string>
#include <utility>

#include "cimmino/error.hpp"

namespace cimmino {

EigenConvergenceError::EigenConvergenceError(double off_diagonal_norm, int sweeps)
    : Error("Jacobi eigensolver did not converge after " + std::to_string(sweeps) +
            " sweeps (off-diagonal norm " + std::to_string(off_diagonal_norm) + ")"),
      off_diagonal_norm_(off_diagonal_norm),
      sweeps_(sweeps) {}

namespace {

std::string format_eigenvalues(const std::vector<double>& values) {
  std::ostringstream os;
  os.precision(6);
  os << "(";
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) os << ", ";
    os << values[i];
  }
  os << ")";
  return os.str();
}

void require_finite(std::span<const double> values, const char* what) {
  for (double v : values) {
    if (!std::isfinite(v)) {
      throw DomainError(std::string(what) + " has a non-finite entry");
    }
  }
}

void require_same_size(std::size_t a, std::size_t b, const char* op) {
  if (a != b) {
    throw DimensionError(std::string(op) + ": dimension mismatch (" + std::to_string(a) +
                         " vs " + std::to_string(b) + ")");
  }
}

}  // namespace

SingularSystemError::SingularSystemError(std::vector<double> eigenvalues)
    : Error("singular A: B_w eigenvalues " + format_eigenvalues(eigenvalues) +
            " are not bounded away from zero"),
      eigenvalues_(std::move(eigenvalues)) {}

// ---------------------------------------------------------------------------
// Vector

Vector::Vector(std::vector<double> values) : values_(std::move(values)) {
  require_finite(values_, "vector");
}

Vector::Vector(std::initializer_list<double> values) : Vector(std::vector<double>(values)) {}

Vector Vector::zeros(std::size_t n) { return Vector(std::vector<double>(n, 0.0)); }

double Vector::at(std::size_t i) const {
  if (i >= values_.size()) throw DimensionError("vector index out of range");
  return values_[i];
}

Vector operator+(const Vector& u, const Vector& v) {
  require_same_size(u.size(), v.size(), "vector add");
  std::vector<double> out(u.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = u[i] + v[i];
  return Vector(std::move(out));
}

Vector operator-(const Vector& u, const Vector& v) {
  require_same_size(u.size(), v.size(), "vector subtract");
  std::vector<double> out(u.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = u[i] - v[i];
  return Vector(std::move(out));
}

Vector operator*(double alpha, const Vector& v) {
  std::vector<double> out(v.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = alpha * v[i];
  return Vector(std::move(out));
}

double inner(const Vector& u, const Vector& v) {
  require_same_size(u.size(), v.size(), "inner");
  double acc = 0.0;
  for (std::size_t i = 0; i < u.size(); ++i) acc += u[i] * v[i];
  return acc;
}

double max_abs(const Vector& v) noexcept {
  double m = 0.0;
  for (double x : v) m = std::max(m, std::abs(x));
  return m;
}

double norm2(const Vector& v) {
  const double scale = max_abs(v);
  if (scale == 0.0) return 0.0;
  if (scale > 1e-150 && scale < 1e150) {
    double acc = 0.0;
    for (double x : v) acc += x * x;
    return std::sqrt(acc);
  }
  double acc = 0.0;
  for (double x : v) {
    const double r = x / scale;
    acc += r * r;
  }
  return scale * std::sqrt(acc);
}

// ---------------------------------------------------------------------------
// DenseMatrix

DenseMatrix::DenseMatrix(std::size_t rows, std::size_t cols, std::vector<double> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (rows_ == 0 || cols_ == 0) throw DimensionError("matrix must have at least one row and column");
  if (entries_.size() != rows_ * cols_) {
    throw DimensionError("matrix entry count " + std::to_string(entries_.size()) +
                         " does not match " + std::to_string(rows_) + "x" +
                         std::to_string(cols_));
  }
  require_finite(entries_, "matrix");
}

DenseMatrix DenseMatrix::identity(std::size_t n) {
  std::vector<double> e(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) e[i * n + i] = 1.0;
  return DenseMatrix(n, n, std::move(e));
}

DenseMatrix DenseMatrix::from_rows(std::initializer_list<std::initializer_list<double>> rows) {
  std::vector<std::vector<double>> r;
  for (const auto& row : rows) r.emplace_back(row);
  return from_rows(r);
}

DenseMatrix DenseMatrix::from_rows(const std::vector<std::vector<double>>& rows) {
  if (rows.empty()) throw DimensionError("matrix must have at least one row and column");
  const std::size_t cols = rows.front().size();
  std::vector<double> e;
  e.reserve(rows.size() * cols);
  for (const auto& row : rows) {
    if (row.size() != cols) throw DimensionError("ragged matrix rows");
    e.insert(e.end(), row.begin(), row.end());
  }
  return DenseMatrix(rows.size(), cols, std::move(e));
}

DenseMatrix DenseMatrix::transpose() const {
  std::vector<double> e(entries_.size());
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) e[j * rows_ + i] = entries_[i * cols_ + j];
  return DenseMatrix(cols_, rows_, std::move(e));
}

double DenseMatrix::max_abs() const noexcept {
  double m = 0.0;
  for (double x : entries_) m = std::max(m, std::abs(x));
  return m;
}

double DenseMatrix::frobenius() const noexcept {
  const double scale = max_abs();
  if (scale == 0.0) return 0.0;
  double acc = 0.0;
  for (double x : entries_) {
    const double r = x / scale;
    acc += r * r;
  }
  return scale * std::sqrt(acc);
}

namespace {

template <typename Op>
DenseMatrix elementwise(const DenseMatrix& a, const DenseMatrix& b, Op op, const char* name) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DimensionError(std::string(name) + ": matrix shapes differ");
  }
  std::vector<double> e(a.entries().size());
  for (std::size_t k = 0; k < e.size(); ++k) e[k] = op(a.entries()[k], b.entries()[k]);
  return DenseMatrix(a.rows(), a.cols(), std::move(e));
}

}  // namespace

DenseMatrix operator+(const DenseMatrix& a, const DenseMatrix& b) {
  return elementwise(a, b, std::plus<>{}, "matrix add");
}

DenseMatrix operator-(const DenseMatrix& a, const DenseMatrix& b) {
  return elementwise(a, b, std::minus<>{}, "matrix subtract");
}

DenseMatrix operator*(double alpha, const DenseMatrix& m) {
  std::vector<double> e(m.entries().begin(), m.entries().end());
  for (double& x : e) x *= alpha;
  return DenseMatrix(m.rows(), m.cols(), std::move(e));
}

DenseMatrix multiply(const DenseMatrix& a, const DenseMatrix& b) {
  require_same_size(a.cols(), b.rows(), "matrix multiply");
  std::vector<double> e(a.rows() * b.cols(), 0.0);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const double aik = a(i, k);
      for (std::size_t j = 0; j < b.cols(); ++j) e[i * b.cols() + j] += aik * b(k, j);
    }
  }
  return DenseMatrix(a.rows(), b.cols(), std::move(e));
}

Vector matvec(const DenseMatrix& m, const Vector& v) {
  require_same_size(m.cols(), v.size(), "matvec");
  std::vector<double> out(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    const auto r = m.row(i);
    double acc = 0.0;
    for (std::size_t j = 0; j < r.size(); ++j) acc += r[j] * v[j];
    out[i] = acc;
  }
  return Vector(std::move(out));
}

double asymmetry(const DenseMatrix& b) {
  if (!b.is_square()) throw DimensionError("asymmetry: matrix is not square");
  double worst = 0.0;
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = i + 1; j < b.cols(); ++j) worst = std::max(worst, std::abs(b(i, j) - b(j, i)));
  return worst;
}

// ---------------------------------------------------------------------------
// Jacobi eigensolver

namespace {

double off_diagonal_norm(const std::vector<double>& a, std::size_t n) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j) acc += a[i * n + j] * a[i * n + j];
  return std::sqrt(acc);
}

// One plane rotation zeroing a[p][q]; updates the working matrix and the
// accumulated eigenvector matrix in place.
void rotate(std::vector<double>& a, std::vector<double>& v, std::size_t n, std::size_t p,
            std::size_t q) {
  const double apq = a[p * n + q];
  if (apq == 0.0) return;
  const double app = a[p * n + p];
  const double aqq = a[q * n + q];

  const double theta = (aqq - app) / (2.0 * apq);
  double t;
  if (std::abs(theta) > 1e150) {
    t = 0.5 / theta;
  } else {
    t = 1.0 / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
    if (theta < 0.0) t = -t;
  }
  const double c = 1.0 / std::sqrt(t * t + 1.0);
  const double s = t * c;

  for (std::size_t k = 0; k < n; ++k) {
    if (k == p || k == q) continue;
    const double akp = a[k * n + p];
    const double akq = a[k * n + q];
    const double new_kp = c * akp - s * akq;
    const double new_kq = s * akp + c * akq;
    a[k * n + p] = a[p * n + k] = new_kp;
    a[k * n + q] = a[q * n + k] = new_kq;
  }
  a[p * n + p] = app - t * apq;
  a[q * n + q] = aqq + t * apq;
  a[p * n + q] = a[q * n + p] = 0.0;

  for (std::size_t k = 0; k < n; ++k) {
    const double vkp = v[k * n + p];
    const double vkq = v[k * n + q];
    v[k * n + p] = c * vkp - s * vkq;
    v[k * n + q] = s * vkp + c * vkq;
  }
}

}  // namespace

EigenDecomposition symmetric_eigen(const DenseMatrix& b, double tol, int max_sweeps) {
  if (!b.is_square()) throw DimensionError("symmetric_eigen: matrix is not square");
  if (!(tol > 0.0) || !std::isfinite(tol)) throw DomainError("symmetric_eigen: tol must be positive");
  const double gate = 1e-12 * (1.0 + b.max_abs());
  if (asymmetry(b) > gate) throw DomainError("symmetric_eigen: matrix is not symmetric");

  const std::size_t n = b.rows();
  std::vector<double> a(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i * n + j] = 0.5 * (b(i, j) + b(j, i));
  std::vector<double> v(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) v[i * n + i] = 1.0;

  const double threshold = tol * DenseMatrix(n, n, a).frobenius();
  int sweeps = 0;
  double off = off_diagonal_norm(a, n);
  while (off > threshold) {
    if (sweeps >= max_sweeps) throw EigenConvergenceError(off, sweeps);
    for (std::size_t p = 0; p + 1 < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) rotate(a, v, n, p, q);
    ++sweeps;
    off = off_diagonal_norm(a, n);
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t i, std::size_t j) { return a[i * n + i] < a[j * n + j]; });

  EigenDecomposition out{std::vector<double>(n), DenseMatrix::identity(n), sweeps};
  std::vector<double> q(n * n);
  for (std::size_t k = 0; k < n; ++k) {
    out.eigenvalues[k] = a[order[k] * n + order[k]];
    for (std::size_t r = 0; r < n; ++r) q[r * n + k] = v[r * n + order[k]];
  }
  out.eigenvectors = DenseMatrix(n, n, std::move(q));
  return out;
}

}  // namespace cimmino
