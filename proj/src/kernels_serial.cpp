#include <algorithm>
#include <vector>

#include "cimmino/kernels.hpp"
#include "cimmino/spectral.hpp"

namespace cimmino::kernels::serial {

void weighted_gram(std::span<const double> a, std::size_t rows, std::size_t cols,
                   std::span<const double> row_scale, std::span<double> out) {
  std::fill(out.begin(), out.end(), 0.0);
  for (std::size_t i = 0; i < rows; ++i) {
    const double* ai = a.data() + i * cols;
    for (std::size_t j = 0; j < cols; ++j) {
      const double sij = row_scale[i] * ai[j];
      for (std::size_t k = j; k < cols; ++k) out[j * cols + k] += sij * ai[k];
    }
  }
  for (std::size_t j = 0; j < cols; ++j)
    for (std::size_t k = j + 1; k < cols; ++k) out[k * cols + j] = out[j * cols + k];
}

void cimmino_update(std::span<const double> a, std::size_t rows, std::size_t cols,
                    std::span<const double> b, std::span<const double> row_norm_sq,
                    std::span<const double> w, std::span<const double> x,
                    std::span<double> out) {
  std::vector<double> correction(cols, 0.0);
  for (std::size_t i = 0; i < rows; ++i) {
    const double* ai = a.data() + i * cols;
    double ax = 0.0;
    for (std::size_t j = 0; j < cols; ++j) ax += ai[j] * x[j];
    const double c = w[i] * (b[i] - ax) / row_norm_sq[i];
    for (std::size_t j = 0; j < cols; ++j) correction[j] += c * ai[j];
  }
  for (std::size_t j = 0; j < cols; ++j) out[j] = x[j] + correction[j];
}

void contraction_grid(std::span<const double> thetas, std::span<const WeightPair> pairs,
                      std::span<double> out) {
  for (std::size_t t = 0; t < thetas.size(); ++t)
    for (std::size_t p = 0; p < pairs.size(); ++p)
      out[t * pairs.size() + p] =
          two_by_two_spectrum_unchecked(pairs[p].w1, pairs[p].w2, thetas[t]).rho;
}

}  // namespace cimmino::kernels::serial
