#include <algorithm>
#include <cstdint>
#include <vector>

#include "cimmino/kernels.hpp"
#include "cimmino/spectral.hpp"

namespace cimmino::kernels::omp {

namespace {

// Output columns handled per task. Each task walks the rows in ascending
// order, so every entry sees the same additions as the serial kernel.
constexpr std::size_t kColumnBlock = 64;

std::int64_t block_count(std::size_t cols) {
  return static_cast<std::int64_t>((cols + kColumnBlock - 1) / kColumnBlock);
}

}  // namespace

void weighted_gram(std::span<const double> a, std::size_t rows, std::size_t cols,
                   std::span<const double> row_scale, std::span<double> out) {
  if (rows * cols * cols < kParallelThreshold) {
    serial::weighted_gram(a, rows, cols, row_scale, out);
    return;
  }
  const std::int64_t blocks = block_count(cols);
  // Upper triangle by blocks of output rows j; triangular work, hence dynamic.
#pragma omp parallel for schedule(dynamic, 1)
  for (std::int64_t blk = 0; blk < blocks; ++blk) {
    const std::size_t j0 = static_cast<std::size_t>(blk) * kColumnBlock;
    const std::size_t j1 = std::min(cols, j0 + kColumnBlock);
    for (std::size_t j = j0; j < j1; ++j) std::fill(out.begin() + j * cols + j, out.begin() + (j + 1) * cols, 0.0);
    for (std::size_t i = 0; i < rows; ++i) {
      const double* ai = a.data() + i * cols;
      for (std::size_t j = j0; j < j1; ++j) {
        const double sij = row_scale[i] * ai[j];
        double* oj = out.data() + j * cols;
        for (std::size_t k = j; k < cols; ++k) oj[k] += sij * ai[k];
      }
    }
  }
  for (std::size_t j = 0; j < cols; ++j)
    for (std::size_t k = j + 1; k < cols; ++k) out[k * cols + j] = out[j * cols + k];
}

void cimmino_update(std::span<const double> a, std::size_t rows, std::size_t cols,
                    std::span<const double> b, std::span<const double> row_norm_sq,
                    std::span<const double> w, std::span<const double> x,
                    std::span<double> out) {
  if (rows * cols < kParallelThreshold) {
    serial::cimmino_update(a, rows, cols, b, row_norm_sq, w, x, out);
    return;
  }
  std::vector<double> coeff(rows);
  const auto m = static_cast<std::int64_t>(rows);
  const std::int64_t blocks = block_count(cols);
#pragma omp parallel
  {
#pragma omp for schedule(static)
    for (std::int64_t i = 0; i < m; ++i) {
      const double* ai = a.data() + static_cast<std::size_t>(i) * cols;
      double ax = 0.0;
      for (std::size_t j = 0; j < cols; ++j) ax += ai[j] * x[j];
      coeff[static_cast<std::size_t>(i)] = w[i] * (b[i] - ax) / row_norm_sq[i];
    }
#pragma omp for schedule(static)
    for (std::int64_t blk = 0; blk < blocks; ++blk) {
      const std::size_t j0 = static_cast<std::size_t>(blk) * kColumnBlock;
      const std::size_t j1 = std::min(cols, j0 + kColumnBlock);
      double correction[kColumnBlock] = {};
      for (std::size_t i = 0; i < rows; ++i) {
        const double* ai = a.data() + i * cols;
        for (std::size_t j = j0; j < j1; ++j) correction[j - j0] += coeff[i] * ai[j];
      }
      for (std::size_t j = j0; j < j1; ++j) out[j] = x[j] + correction[j - j0];
    }
  }
}

void contraction_grid(std::span<const double> thetas, std::span<const WeightPair> pairs,
                      std::span<double> out) {
  const std::size_t npairs = pairs.size();
  if (thetas.size() * npairs < kParallelThreshold) {
    serial::contraction_grid(thetas, pairs, out);
    return;
  }
  const auto total = static_cast<std::int64_t>(thetas.size() * npairs);
  // Results land at their grid index, so output order is independent of
  // scheduling.
#pragma omp parallel for schedule(static)
  for (std::int64_t idx = 0; idx < total; ++idx) {
    const auto t = static_cast<std::size_t>(idx) / npairs;
    const auto p = static_cast<std::size_t>(idx) % npairs;
    out[static_cast<std::size_t>(idx)] = two_by_two_spectrum_unchecked(pairs[p].w1, pairs[p].w2, thetas[t]).rho;
  }
}

}  // namespace cimmino::kernels::omp
