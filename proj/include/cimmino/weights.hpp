#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace cimmino {

/// Strictly positive, finite per-row weights w_i of the weighted iteration.
class WeightVector {
 public:
  explicit WeightVector(std::vector<double> weights);
  WeightVector(std::initializer_list<double> weights);

  /// The standard choice w = (1, ..., 1).
  static WeightVector unit(std::size_t n);

  std::size_t size() const noexcept { return weights_.size(); }
  double operator[](std::size_t i) const noexcept { return weights_[i]; }
  std::span<const double> values() const noexcept { return weights_; }

  /// alpha * w for alpha > 0.
  WeightVector scaled(double alpha) const;

  bool operator==(const WeightVector&) const = default;

 private:
  std::vector<double> weights_;
};

}  // namespace cimmino

namespace cimmino {

/// (w1, w2) for the two-row closed form.
struct WeightPair {
  double w1;
  double w2;

  bool operator==(const WeightPair&) const = default;
};

}  // namespace cimmino
