#include "cimmino/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "cimmino/error.hpp"

namespace cimmino {

Hyperplane::Hyperplane(Vector normal, double offset)
    : normal_(std::move(normal)), offset_(offset), normal_norm_sq_(0.0) {
  if (!std::isfinite(offset_)) throw DomainError("hyperplane offset must be finite");
  normal_norm_sq_ = inner(normal_, normal_);
  if (!(normal_norm_sq_ > 0.0)) throw DomainError("degenerate hyperplane row");
  if (!std::isfinite(normal_norm_sq_)) throw DomainError("hyperplane normal norm overflows");
}

UnitNormal::UnitNormal(const Vector& a) {
  const double nrm = norm2(a);
  if (!(nrm > 0.0)) throw DomainError("degenerate hyperplane row");
  std::vector<double> d(a.size());
  for (std::size_t i = 0; i < d.size(); ++i) d[i] = a[i] / nrm;
  direction_ = Vector(std::move(d));
}

UnitNormal unit_normal(const Vector& a) { return UnitNormal(a); }

DenseMatrix projection_matrix(const UnitNormal& u) {
  const Vector& d = u.direction();
  const std::size_t n = d.size();
  std::vector<double> e(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) e[i * n + j] = d[i] * d[j];
  return DenseMatrix(n, n, std::move(e));
}

Vector reflect(const Vector& x, const Hyperplane& h) {
  const double r = h.offset() - inner(h.normal(), x);
  return x + (2.0 * r / h.normal_norm_sq()) * h.normal();
}

double internormal_angle(const Vector& a1, const Vector& a2) {
  const UnitNormal u1(a1);
  const UnitNormal u2(a2);
  // acos(u1 . u2) loses about half the digits near 0 and pi.
  const double d = norm2(u1.direction() - u2.direction());
  const double s = norm2(u1.direction() + u2.direction());
  return 2.0 * std::atan2(d, s);
}

bool is_degenerate_angle(double theta) noexcept {
  return !(theta > 1e-12) || !(theta < std::numbers::pi - 1e-12);
}

WeightVector masses_to_weights(std::span<const double> masses) {
  if (masses.empty()) throw DimensionError("masses_to_weights: no masses given");
  double total = 0.0;
  for (double m : masses) {
    if (!std::isfinite(m) || !(m > 0.0)) throw DomainError("masses must be positive and finite");
    total += m;
  }
  std::vector<double> w(masses.size());
  for (std::size_t i = 0; i < w.size(); ++i) w[i] = 2.0 * masses[i] / total;
  return WeightVector(std::move(w));
}

}  // namespace cimmino
