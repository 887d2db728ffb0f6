#include <doctest.h>

#include <cmath>
#include <limits>
#include <random>

#include "cimmino/error.hpp"
#include "cimmino/linalg.hpp"
#include "oracles.hpp"

using namespace cimmino;

namespace {

double max_abs_diff(const DenseMatrix& a, const DenseMatrix& b) { return (a - b).max_abs(); }

DenseMatrix reconstruct(const EigenDecomposition& e) {
  const std::size_t n = e.eigenvalues.size();
  std::vector<double> d(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) d[i * n + i] = e.eigenvalues[i];
  const DenseMatrix& q = e.eigenvectors;
  return multiply(multiply(q, DenseMatrix(n, n, d)), q.transpose());
}

DenseMatrix random_symmetric(std::mt19937_64& rng, std::size_t n, double scale = 1.0) {
  std::vector<double> e(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) e[i * n + j] = e[j * n + i] = scale * oracle::uniform(rng, -1.0, 1.0);
  return DenseMatrix(n, n, e);
}

}  // namespace

TEST_CASE("matvec") {
  CHECK(matvec(DenseMatrix::identity(2), Vector{3.0, -1.0}) == Vector{3.0, -1.0});
  CHECK(matvec(DenseMatrix::from_rows({{2, 1}, {1, 2}}), Vector{1.0, 1.0}) == Vector{3.0, 3.0});
  CHECK(matvec(DenseMatrix::from_rows({{1, 1}, {1, -1}}), Vector{1.0, 1.0}) == Vector{2.0, 0.0});
  CHECK_THROWS_AS(matvec(DenseMatrix::identity(2), Vector{1.0, 2.0, 3.0}), DimensionError);
}

TEST_CASE("norm2 and inner") {
  CHECK(norm2(Vector{3.0, 4.0}) == 5.0);
  CHECK(inner(Vector{2.0, 1.0}, Vector{1.0, 2.0}) == 4.0);
  CHECK(inner(Vector{1.0, 1.0}, Vector{1.0, -1.0}) == 0.0);
  CHECK_THROWS_AS(inner(Vector{1.0}, Vector{1.0, 2.0}), DimensionError);
  CHECK(norm2(Vector{3e200, 4e200}) == doctest::Approx(5e200));
  CHECK(norm2(Vector::zeros(3)) == 0.0);
}

TEST_CASE("values reject non-finite entries") {
  const double nan = std::numeric_limits<double>::quiet_NaN();
  const double inf = std::numeric_limits<double>::infinity();
  CHECK_THROWS_AS(Vector({1.0, nan}), DomainError);
  CHECK_THROWS_AS(DenseMatrix(1, 2, {inf, 0.0}), DomainError);
  CHECK_THROWS_AS(DenseMatrix(2, 2, {1.0, 2.0, 3.0}), DimensionError);
  CHECK_THROWS_AS(DenseMatrix(0, 2, {}), DimensionError);
  CHECK_THROWS_AS(DenseMatrix::from_rows({{1.0, 2.0}, {3.0}}), DimensionError);
}

TEST_CASE("symmetric_eigen: diagonal input") {
  const auto e = symmetric_eigen(DenseMatrix::from_rows({{2, 0}, {0, 3}}));
  CHECK(e.eigenvalues == std::vector<double>{2.0, 3.0});
  CHECK(e.eigenvectors == DenseMatrix::identity(2));
  CHECK(e.sweeps == 0);
}

TEST_CASE("symmetric_eigen: two-row Gram matrix") {
  const auto b = (1.0 / 5.0) * DenseMatrix::from_rows({{5, 4}, {4, 5}});
  const auto e = symmetric_eigen(b);
  CHECK(std::abs(e.eigenvalues[0] - 0.2) <= 1e-12);
  CHECK(std::abs(e.eigenvalues[1] - 1.8) <= 1e-12);
}

TEST_CASE("symmetric_eigen: random 3x3 against characteristic-polynomial bisection") {
  std::mt19937_64 rng(20240611);
  for (int trial = 0; trial < 10; ++trial) {
    const DenseMatrix b = random_symmetric(rng, 3, 2.0);
    const auto expected = oracle::eigenvalues_by_bisection(oracle::to_rows(b));
    const auto e = symmetric_eigen(b);
    for (std::size_t i = 0; i < 3; ++i) CHECK(e.eigenvalues[i] == doctest::Approx(expected[i]).epsilon(1e-9));
  }
}

TEST_CASE("symmetric_eigen: reconstruction and orthogonality for random input") {
  std::mt19937_64 rng(7);
  for (std::size_t n = 1; n <= 12; ++n) {
    for (double scale : {1e-3, 1.0, 1e4}) {
      const DenseMatrix b = random_symmetric(rng, n, scale);
      const auto e = symmetric_eigen(b);
      const DenseMatrix& q = e.eigenvectors;
      CHECK(max_abs_diff(multiply(q.transpose(), q), DenseMatrix::identity(n)) <= 1e-10);
      CHECK(max_abs_diff(reconstruct(e), b) <= 1e-10 * (1.0 + b.max_abs()));
      CHECK(std::is_sorted(e.eigenvalues.begin(), e.eigenvalues.end()));
    }
  }
}

TEST_CASE("symmetric_eigen: n = 2 matches the quadratic formula") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const DenseMatrix b = random_symmetric(rng, 2, 3.0);
    const double tr = b(0, 0) + b(1, 1);
    const double det = b(0, 0) * b(1, 1) - b(0, 1) * b(1, 0);
    const double disc = std::sqrt(std::max(0.0, tr * tr / 4.0 - det));
    const auto e = symmetric_eigen(b);
    CHECK(std::abs(e.eigenvalues[0] - (tr / 2.0 - disc)) <= 1e-12);
    CHECK(std::abs(e.eigenvalues[1] - (tr / 2.0 + disc)) <= 1e-12);
  }
}

TEST_CASE("symmetric_eigen: ties stay adjacent and output is deterministic") {
  const auto e = symmetric_eigen(DenseMatrix::from_rows({{2, 0, 0}, {0, 1, 0}, {0, 0, 2}}));
  CHECK(e.eigenvalues == std::vector<double>{1.0, 2.0, 2.0});
  // Equal eigenvalues keep their original column order.
  CHECK(e.eigenvectors(0, 1) == 1.0);
  CHECK(e.eigenvectors(2, 2) == 1.0);

  std::mt19937_64 rng(3);
  const DenseMatrix b = random_symmetric(rng, 6);
  const auto first = symmetric_eigen(b);
  const auto second = symmetric_eigen(b);
  CHECK(first.eigenvalues == second.eigenvalues);
  CHECK(first.eigenvectors == second.eigenvectors);
}

TEST_CASE("symmetric_eigen: symmetrizes rounding-level asymmetry") {
  const DenseMatrix b = DenseMatrix::from_rows({{1.0, 0.5 + 1e-14}, {0.5, 1.0}});
  const auto e = symmetric_eigen(b);
  CHECK(e.eigenvalues[0] == doctest::Approx(0.5));
  CHECK(e.eigenvalues[1] == doctest::Approx(1.5));
}

TEST_CASE("symmetric_eigen: errors") {
  CHECK_THROWS_AS(symmetric_eigen(DenseMatrix(2, 3, std::vector<double>(6, 1.0))), DimensionError);
  CHECK_THROWS_AS(symmetric_eigen(DenseMatrix::from_rows({{1, 2}, {3, 4}})), DomainError);
  CHECK_THROWS_AS(symmetric_eigen(DenseMatrix::identity(2), 0.0), DomainError);

  std::mt19937_64 rng(5);
  const DenseMatrix b = random_symmetric(rng, 5);
  try {
    (void)symmetric_eigen(b, kDefaultEigenTolerance, 1);
    FAIL("expected EigenConvergenceError");
  } catch (const EigenConvergenceError& e) {
    CHECK(e.sweeps() == 1);
    CHECK(e.off_diagonal_norm() > 0.0);
  }
}
