#include "cimmino/weights.hpp"

#include <cmath>
#include <string>
#include <utility>

#include "cimmino/error.hpp"

namespace cimmino {

WeightVector::WeightVector(std::vector<double> weights) : weights_(std::move(weights)) {
  if (weights_.empty()) throw DimensionError("weight vector is empty");
  for (std::size_t i = 0; i < weights_.size(); ++i) {
    if (!std::isfinite(weights_[i]) || !(weights_[i] > 0.0)) {
      throw DomainError("weight w" + std::to_string(i + 1) + " must be positive and finite");
    }
  }
}

WeightVector::WeightVector(std::initializer_list<double> weights)
    : WeightVector(std::vector<double>(weights)) {}

WeightVector WeightVector::unit(std::size_t n) { return WeightVector(std::vector<double>(n, 1.0)); }

WeightVector WeightVector::scaled(double alpha) const {
  if (!std::isfinite(alpha) || !(alpha > 0.0)) throw DomainError("scale factor must be positive");
  std::vector<double> w = weights_;
  for (double& x : w) x *= alpha;
  return WeightVector(std::move(w));
}

}  // namespace cimmino
