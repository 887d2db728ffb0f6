#pragma once

// Hyperplanes H = {x : <a, x> = b}, their unit normals and rank-one
// projectors, point reflections, and the angle between two normals.

#include <span>

#include "cimmino/linalg.hpp"
#include "cimmino/weights.hpp"

namespace cimmino {

/// {x : <normal, x> = offset}. The normal is stored unnormalized.
class Hyperplane {
 public:
  Hyperplane(Vector normal, double offset);

  const Vector& normal() const noexcept { return normal_; }
  double offset() const noexcept { return offset_; }
  double normal_norm_sq() const noexcept { return normal_norm_sq_; }
  std::size_t dimension() const noexcept { return normal_.size(); }

 private:
  Vector normal_;
  double offset_;
  double normal_norm_sq_;
};

class UnitNormal {
 public:
  /// Normalizes `a`; throws DomainError("degenerate hyperplane row") for a = 0.
  explicit UnitNormal(const Vector& a);

  const Vector& direction() const noexcept { return direction_; }

 private:
  Vector direction_;
};

UnitNormal unit_normal(const Vector& a);

/// P = u u^T.
DenseMatrix projection_matrix(const UnitNormal& u);

/// Mirror image of x across h: x + 2 (b - <a, x>) / ||a||^2 * a.
Vector reflect(const Vector& x, const Hyperplane& h);

/// Angle in [0, pi] between two nonzero normals. The cosine is clamped to
/// [-1, 1] so nearly parallel rows never yield NaN.
double internormal_angle(const Vector& a1, const Vector& a2);

/// Within 1e-12 of 0 or pi: parallel normals, hence singular A.
bool is_degenerate_angle(double theta) noexcept;

/// Centroid masses m_i > 0 to step weights w_i = 2 m_i / sum_j m_j.
WeightVector masses_to_weights(std::span<const double> masses);

}  // namespace cimmino
