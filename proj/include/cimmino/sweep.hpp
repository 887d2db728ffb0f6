#pragma once

// Parameter grids behind the rate-versus-angle and error-envelope tables.

#include <cstddef>
#include <span>
#include <vector>

#include "cimmino/weights.hpp"

namespace cimmino {

/// Inclusive grid start, start + step, ..., stop (degrees). Points are
/// computed as start + k * step, so the grid does not accumulate drift.
std::vector<double> theta_grid_degrees(double start, double stop, double step);

struct SweepTable {
  std::vector<double> theta_deg;
  std::vector<WeightPair> pairs;
  /// |cos theta| per grid angle: the best rate over all weight pairs.
  std::vector<double> unit;
  /// Row-major theta_deg.size() x pairs.size().
  std::vector<double> rho;

  double at(std::size_t theta_index, std::size_t pair_index) const {
    return rho[theta_index * pairs.size() + pair_index];
  }
};

/// Closed-form contraction factor for every (angle, pair). All arguments
/// are validated before the parallel kernel runs; angles must lie strictly
/// inside (0, 180) degrees.
SweepTable contraction_sweep(std::span<const double> theta_deg, std::span<const WeightPair> pairs);

struct EnvelopeTable {
  std::vector<double> rates;
  /// envelopes[r][nu] = e0 * rates[r]^nu.
  std::vector<std::vector<double>> envelopes;
  std::size_t steps = 0;
};

EnvelopeTable envelope_table(std::span<const double> rates, double e0_norm, std::size_t steps);

}  // namespace cimmino
