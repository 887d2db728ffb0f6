#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "cimmino/error.hpp"
#include "cimmino/geometry.hpp"
#include "oracles.hpp"

using namespace cimmino;

namespace {

Vector random_vector(std::mt19937_64& rng, std::size_t n, double lo = -3.0, double hi = 3.0) {
  std::vector<double> v(n);
  for (double& x : v) x = oracle::uniform(rng, lo, hi);
  return Vector(v);
}

}  // namespace

TEST_CASE("unit_normal") {
  CHECK(unit_normal(Vector{2.0, 0.0}).direction() == Vector{1.0, 0.0});
  const auto u = unit_normal(Vector{2.0, 1.0}).direction();
  CHECK(u[0] == doctest::Approx(2.0 / std::sqrt(5.0)).epsilon(1e-15));
  CHECK(u[1] == doctest::Approx(1.0 / std::sqrt(5.0)).epsilon(1e-15));
  const auto v = unit_normal(Vector{1.0, -1.0}).direction();
  CHECK(v[0] == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-15));
  CHECK(v[1] == doctest::Approx(-1.0 / std::sqrt(2.0)).epsilon(1e-15));
  CHECK(std::abs(norm2(u) - 1.0) <= 1e-14);
  CHECK_THROWS_WITH_AS(unit_normal(Vector{0.0, 0.0}), "degenerate hyperplane row", DomainError);
}

TEST_CASE("projection_matrix") {
  CHECK(projection_matrix(unit_normal(Vector{1.0, 0.0})) == DenseMatrix::from_rows({{1, 0}, {0, 0}}));
  const auto p = projection_matrix(unit_normal(Vector{2.0, 1.0}));
  const auto expected = (1.0 / 5.0) * DenseMatrix::from_rows({{4, 2}, {2, 1}});
  CHECK((p - expected).max_abs() <= 1e-15);
  const auto q = projection_matrix(unit_normal(Vector{1.0, 1.0}));
  CHECK((q - 0.5 * DenseMatrix::from_rows({{1, 1}, {1, 1}})).max_abs() <= 1e-15);
}

TEST_CASE("projection_matrix is an idempotent symmetric rank-one projector") {
  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 1 + trial % 6;
    const auto p = projection_matrix(unit_normal(random_vector(rng, n)));
    CHECK((multiply(p, p) - p).max_abs() <= 1e-13);
    CHECK((p - p.transpose()).max_abs() == 0.0);
    double trace = 0.0;
    for (std::size_t i = 0; i < n; ++i) trace += p(i, i);
    CHECK(trace == doctest::Approx(1.0).epsilon(1e-14));
  }
}

TEST_CASE("reflect") {
  CHECK(reflect(Vector{3.0, -1.0}, Hyperplane(Vector{1.0, 1.0}, 2.0)) == Vector{3.0, -1.0});
  CHECK(reflect(Vector{3.0, -1.0}, Hyperplane(Vector{1.0, -1.0}, 0.0)) == Vector{-1.0, 3.0});

  // Two lines through Z = 0 with normals 120 degrees apart; P0 = (2, 0).
  const Vector p0{2.0, 0.0};
  const Hyperplane h1(Vector{1.0, 0.0}, 0.0);
  const Hyperplane h2(Vector{-0.5, std::sqrt(3.0) / 2.0}, 0.0);
  CHECK(std::abs(norm2(reflect(p0, h1)) - 2.0) <= 1e-15);
  CHECK(std::abs(norm2(reflect(p0, h2)) - 2.0) <= 1e-15);

  CHECK_THROWS_AS(Hyperplane(Vector{0.0, 0.0}, 1.0), DomainError);
  CHECK_THROWS_AS(reflect(Vector{1.0, 2.0, 3.0}, h1), DimensionError);
}

TEST_CASE("reflect is an involution and an isometry about on-plane points") {
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 2 + trial % 4;
    const Vector a = random_vector(rng, n);
    const Hyperplane h(a, oracle::uniform(rng, -2.0, 2.0));
    const Vector x = random_vector(rng, n);
    const Vector q = reflect(x, h);
    CHECK(max_abs(reflect(q, h) - x) <= 1e-12);

    // On-plane point: arbitrary y projected onto H.
    const Vector y = random_vector(rng, n);
    const Vector p = y + ((h.offset() - inner(a, y)) / h.normal_norm_sq()) * a;
    CHECK(std::abs(norm2(q - p) - norm2(x - p)) <= 1e-12);
  }
}

TEST_CASE("internormal_angle") {
  CHECK(internormal_angle(Vector{1.0, 0.0}, Vector{0.0, 1.0}) == doctest::Approx(std::numbers::pi / 2));
  CHECK(internormal_angle(Vector{2.0, 1.0}, Vector{1.0, 2.0}) == doctest::Approx(std::acos(0.8)));
  CHECK(std::abs(internormal_angle(Vector{2.0, 1.0}, Vector{1.0, 2.0}) - 0.6435011087932844) <= 1e-15);
  CHECK(internormal_angle(Vector{1.0, 0.0}, Vector{-0.5, std::sqrt(3.0) / 2.0}) ==
        doctest::Approx(2.0 * std::numbers::pi / 3.0).epsilon(1e-14));
  CHECK_THROWS_AS(internormal_angle(Vector{0.0, 0.0}, Vector{1.0, 0.0}), DomainError);
}

TEST_CASE("internormal_angle at parallel rows is finite and flagged degenerate") {
  const double same = internormal_angle(Vector{1.0, 1.0}, Vector{3.0, 3.0});
  const double opposite = internormal_angle(Vector{1.0, 1.0}, Vector{-2.0, -2.0});
  CHECK(std::isfinite(same));
  CHECK(std::isfinite(opposite));
  CHECK(is_degenerate_angle(same));
  CHECK(is_degenerate_angle(opposite));
  CHECK_FALSE(is_degenerate_angle(std::numbers::pi / 2));
}

TEST_CASE("internormal_angle is scale-invariant") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    const Vector a1 = random_vector(rng, 2);
    const Vector a2 = random_vector(rng, 2);
    const double alpha = std::exp(oracle::uniform(rng, -5.0, 5.0));
    const double beta = std::exp(oracle::uniform(rng, -5.0, 5.0));
    CHECK(std::abs(internormal_angle(alpha * a1, beta * a2) - internormal_angle(a1, a2)) <= 1e-13);
  }
}

TEST_CASE("masses_to_weights") {
  const std::vector<double> equal{1.0, 1.0};
  CHECK(masses_to_weights(equal) == WeightVector{1.0, 1.0});
  const std::vector<double> skew{3.0, 1.0};
  CHECK(masses_to_weights(skew) == WeightVector{1.5, 0.5});
  const std::vector<double> three{1.0, 1.0, 1.0};
  const auto w = masses_to_weights(three);
  for (std::size_t i = 0; i < 3; ++i) CHECK(w[i] == doctest::Approx(2.0 / 3.0).epsilon(1e-15));

  const std::vector<double> bad{1.0, 0.0};
  CHECK_THROWS_AS(masses_to_weights(bad), DomainError);
  const std::vector<double> negative{1.0, -1.0};
  CHECK_THROWS_AS(masses_to_weights(negative), DomainError);
}
