#include <doctest.h>

#include <cmath>
#include <numbers>

#include "cimmino/error.hpp"
#include "cimmino/kernels.hpp"
#include "cimmino/spectral.hpp"
#include "cimmino/sweep.hpp"

using namespace cimmino;

namespace {
double rad(double deg) { return deg * std::numbers::pi / 180.0; }
}  // namespace

TEST_CASE("theta_grid_degrees") {
  const auto g = theta_grid_degrees(10, 170, 1);
  REQUIRE(g.size() == 161);
  CHECK(g.front() == 10.0);
  CHECK(g.back() == 170.0);
  CHECK(g[57] == 67.0);
  CHECK(theta_grid_degrees(10, 170, 0.1).size() == 1601);
  CHECK(theta_grid_degrees(10, 170, 0.1).back() == doctest::Approx(170.0).epsilon(1e-14));
  CHECK(theta_grid_degrees(30, 30, 5) == std::vector<double>{30.0});
  CHECK(theta_grid_degrees(10, 20, 3) == std::vector<double>{10, 13, 16, 19});
  CHECK_THROWS_AS(theta_grid_degrees(10, 170, 0), DomainError);
  CHECK_THROWS_AS(theta_grid_degrees(10, 170, -1), DomainError);
  CHECK_THROWS_AS(theta_grid_degrees(170, 10, 1), DomainError);
  CHECK_THROWS_AS(theta_grid_degrees(0, 1, 1e-9), DomainError);
  CHECK_THROWS_AS(theta_grid_degrees(0, NAN, 1), DomainError);
}

TEST_CASE("contraction_sweep matches the closed form pointwise") {
  const auto grid = theta_grid_degrees(10, 170, 1);
  const std::vector<WeightPair> pairs{{1, 1}, {1.4, 1.4}, {0.5, 1.5}, {0.2, 0.2}};
  const auto table = contraction_sweep(grid, pairs);
  REQUIRE(table.rho.size() == grid.size() * pairs.size());
  for (std::size_t t = 0; t < grid.size(); ++t) {
    CHECK(table.unit[t] == std::abs(std::cos(rad(grid[t]))));
    CHECK(std::abs(table.at(t, 0) - table.unit[t]) <= 1e-12);
    for (std::size_t p = 0; p < pairs.size(); ++p) {
      CHECK(table.at(t, p) == contraction_factor_2d(pairs[p].w1, pairs[p].w2, rad(grid[t])).rho);
      CHECK(table.at(t, p) >= table.unit[t] - 1e-14);
    }
  }
  CHECK(table.at(160, 1) == doctest::Approx(0.4 + 1.4 * std::abs(std::cos(rad(170)))).epsilon(1e-14));
  CHECK(table.at(160, 1) > 1.7787);
  CHECK(table.at(110, 3) == doctest::Approx(0.9).epsilon(1e-14));  // 120 degrees
}

TEST_CASE("contraction_sweep is identical to the serial kernel") {
  const auto grid = theta_grid_degrees(1, 179, 0.01);
  const std::vector<WeightPair> pairs{{1, 1}, {0.3, 1.9}, {1.4, 1.4}};
  const auto table = contraction_sweep(grid, pairs);
  std::vector<double> radians(grid.size());
  for (std::size_t t = 0; t < grid.size(); ++t) radians[t] = rad(grid[t]);
  std::vector<double> serial(grid.size() * pairs.size());
  kernels::serial::contraction_grid(radians, pairs, serial);
  CHECK(serial == table.rho);
}

TEST_CASE("contraction_sweep validates before evaluating") {
  const std::vector<WeightPair> ok{{1, 1}};
  const std::vector<double> zero{0.0, 90.0};
  const std::vector<double> straight{90.0, 180.0};
  CHECK_THROWS_AS(contraction_sweep(zero, ok), DomainError);
  CHECK_THROWS_AS(contraction_sweep(straight, ok), DomainError);
  const std::vector<double> fine{45.0};
  const std::vector<WeightPair> bad{{1, 0}};
  CHECK_THROWS_AS(contraction_sweep(fine, bad), DomainError);
  const auto empty = contraction_sweep(fine, std::vector<WeightPair>{});
  CHECK(empty.rho.empty());
  CHECK(empty.unit.size() == 1);
}

TEST_CASE("envelope_table") {
  const std::vector<double> rates{0.9, 0.5};
  const auto t = envelope_table(rates, 1.0, 12);
  REQUIRE(t.envelopes.size() == 2);
  CHECK(t.envelopes[0].size() == 13);
  CHECK(t.envelopes[0].back() / t.envelopes[1].back() == doctest::Approx(1156.8313814).epsilon(1e-9));
  CHECK_THROWS_AS(envelope_table(std::vector<double>{}, 1.0, 3), DomainError);
  CHECK_THROWS_AS(envelope_table(std::vector<double>{0.5}, -1.0, 3), DomainError);
}
