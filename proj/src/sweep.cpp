#include "cimmino/sweep.hpp"

#include <cmath>
#include <numbers>

#include "cimmino/error.hpp"
#include "cimmino/geometry.hpp"
#include "cimmino/kernels.hpp"
#include "cimmino/spectral.hpp"

namespace cimmino {

namespace {

constexpr double kMaxGridPoints = 1e7;

double to_radians(double deg) { return deg * std::numbers::pi / 180.0; }

}  // namespace

std::vector<double> theta_grid_degrees(double start, double stop, double step) {
  if (!std::isfinite(start) || !std::isfinite(stop) || !std::isfinite(step)) {
    throw DomainError("theta grid bounds must be finite");
  }
  if (!(step > 0.0)) throw DomainError("theta grid step must be positive");
  if (stop < start) throw DomainError("theta grid stop must not precede start");
  const double span = (stop - start) / step;
  if (span > kMaxGridPoints) throw DomainError("theta grid is too large");
  // Tolerate rounding in (stop - start) / step so that 10:170:0.1 keeps 170.
  const auto count = static_cast<std::size_t>(std::floor(span + 1e-9)) + 1;
  std::vector<double> grid(count);
  for (std::size_t k = 0; k < count; ++k) grid[k] = start + static_cast<double>(k) * step;
  return grid;
}

SweepTable contraction_sweep(std::span<const double> theta_deg, std::span<const WeightPair> pairs) {
  SweepTable table;
  table.theta_deg.assign(theta_deg.begin(), theta_deg.end());
  table.pairs.assign(pairs.begin(), pairs.end());

  std::vector<double> radians(theta_deg.size());
  for (std::size_t t = 0; t < theta_deg.size(); ++t) {
    radians[t] = to_radians(theta_deg[t]);
    if (!std::isfinite(radians[t]) || is_degenerate_angle(radians[t])) {
      throw DomainError("parallel normals: singular A (theta must lie strictly inside (0, 180) degrees)");
    }
  }
  for (const auto& p : pairs) {
    if (!std::isfinite(p.w1) || !(p.w1 > 0.0) || !std::isfinite(p.w2) || !(p.w2 > 0.0)) {
      throw DomainError("weights must be positive and finite");
    }
  }

  table.unit.resize(radians.size());
  for (std::size_t t = 0; t < radians.size(); ++t) table.unit[t] = std::abs(std::cos(radians[t]));
  table.rho.resize(radians.size() * pairs.size());
  kernels::omp::contraction_grid(radians, pairs, table.rho);
  return table;
}

EnvelopeTable envelope_table(std::span<const double> rates, double e0_norm, std::size_t steps) {
  if (rates.empty()) throw DomainError("at least one rate is required");
  EnvelopeTable table;
  table.rates.assign(rates.begin(), rates.end());
  table.steps = steps;
  for (double r : rates) table.envelopes.push_back(error_envelope(r, e0_norm, steps));
  return table;
}

}  // namespace cimmino
