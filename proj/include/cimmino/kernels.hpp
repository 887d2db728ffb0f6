#pragma once

// Data-parallel inner loops. Every kernel exists twice: `serial` is the
// straightforward reference, `omp` is the OpenMP version used by the
// library. Both perform the same floating-point operations in the same
// order per output entry, so their results are bitwise identical for any
// thread count.
//
// Matrices are row-major spans; callers validate shapes and values.

#include <cstddef>
#include <span>

#include "cimmino/weights.hpp"

namespace cimmino::kernels {

/// Problem sizes (rows * cols, or grid points) below this run serially
/// even in the `omp` kernels.
inline constexpr std::size_t kParallelThreshold = 4096;

namespace serial {

/// out (cols x cols) = sum_i row_scale[i] * a_i a_i^T, rows summed in
/// ascending order.
void weighted_gram(std::span<const double> a, std::size_t rows, std::size_t cols,
                   std::span<const double> row_scale, std::span<double> out);

/// out = x + sum_i w_i (b_i - <a_i, x>) / ||a_i||^2 * a_i, rows summed in
/// ascending order.
void cimmino_update(std::span<const double> a, std::size_t rows, std::size_t cols,
                    std::span<const double> b, std::span<const double> row_norm_sq,
                    std::span<const double> w, std::span<const double> x,
                    std::span<double> out);

/// out[t * pairs.size() + p] = two-row contraction factor at (pairs[p], thetas[t]).
/// Angles in radians, strictly inside (0, pi).
void contraction_grid(std::span<const double> thetas, std::span<const WeightPair> pairs,
                      std::span<double> out);

}  // namespace serial

namespace omp {

void weighted_gram(std::span<const double> a, std::size_t rows, std::size_t cols,
                   std::span<const double> row_scale, std::span<double> out);

void cimmino_update(std::span<const double> a, std::size_t rows, std::size_t cols,
                    std::span<const double> b, std::span<const double> row_norm_sq,
                    std::span<const double> w, std::span<const double> x,
                    std::span<double> out);

void contraction_grid(std::span<const double> thetas, std::span<const WeightPair> pairs,
                      std::span<double> out);

}  // namespace omp

}  // namespace cimmino::kernels
