#include "cimmino/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "cimmino/error.hpp"
#include "cimmino/geometry.hpp"
#include "cimmino/kernels.hpp"

namespace cimmino {

std::string_view to_string(ConvergenceKind kind) noexcept {
  switch (kind) {
    case ConvergenceKind::Converges: return "Converges";
    case ConvergenceKind::Stalls: return "Stalls";
    case ConvergenceKind::Diverges: return "Diverges";
  }
  return "Unknown";
}

DenseMatrix build_Bw(const LinearSystem& sys, const WeightVector& w) {
  const std::size_t n = sys.size();
  if (w.size() != n) {
    throw DimensionError("expected " + std::to_string(n) + " weights, got " + std::to_string(w.size()));
  }
  std::vector<double> scale(n);
  for (std::size_t i = 0; i < n; ++i) scale[i] = w[i] / sys.row_norm_sq()[i];
  std::vector<double> out(n * n);
  kernels::omp::weighted_gram(sys.matrix().entries(), n, n, scale, out);
  return DenseMatrix(n, n, std::move(out));
}

DenseMatrix build_Mw(const LinearSystem& sys, const WeightVector& w) {
  return DenseMatrix::identity(sys.size()) - build_Bw(sys, w);
}

namespace {

ConvergenceClass classify_rate(double rho) noexcept {
  if (std::abs(rho - 1.0) <= kStallTolerance) return {ConvergenceKind::Stalls, rho};
  if (rho < 1.0) return {ConvergenceKind::Converges, rho};
  return {ConvergenceKind::Diverges, rho};
}

bool near_identity(const DenseMatrix& b, double tol) {
  const std::size_t n = b.rows();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (std::abs(b(i, j) - (i == j ? 1.0 : 0.0)) > tol) return false;
  return true;
}

}  // namespace

SpectralReport spectral_radius_exact(const LinearSystem& sys, const WeightVector& w) {
  const DenseMatrix bw = build_Bw(sys, w);
  EigenDecomposition eig = symmetric_eigen(bw);
  const double lo = eig.eigenvalues.front();
  const double hi = eig.eigenvalues.back();
  if (!(lo > kSingularityRatio * hi)) throw SingularSystemError(std::move(eig.eigenvalues));

  SpectralReport r;
  r.n = sys.size();
  r.weights.assign(w.values().begin(), w.values().end());
  if (r.n == 2) {
    const auto row0 = sys.matrix().row(0);
    const auto row1 = sys.matrix().row(1);
    r.theta = internormal_angle(Vector({row0[0], row0[1]}), Vector({row1[0], row1[1]}));
  }
  r.spectral_radius = std::max(std::abs(1.0 - lo), std::abs(1.0 - hi));
  r.condition_number = hi / lo;
  r.convergence = classify_rate(r.spectral_radius);
  r.optimal_alpha = 2.0 / (lo + hi);
  r.optimal_scaled_rate = (r.condition_number - 1.0) / (r.condition_number + 1.0);
  r.tight_frame = near_identity(bw, kTightFrameTolerance);
  r.eigenvalues = std::move(eig.eigenvalues);
  return r;
}

TwoByTwoSpectrum two_by_two_spectrum_unchecked(double w1, double w2, double theta) noexcept {
  const double c = std::cos(theta);
  const double sn = std::sin(theta);
  TwoByTwoSpectrum out{};
  out.theta = theta;
  out.w1 = w1;
  out.w2 = w2;
  out.mu = 0.5 * (w1 + w2);
  out.s = 0.5 * (w1 - w2);
  out.delta = std::sqrt((w1 - w2) * (w1 - w2) + 4.0 * w1 * w2 * c * c);
  out.lambda_plus = out.mu + 0.5 * out.delta;
  // mu - delta/2 cancels when the rows are nearly parallel; the determinant
  // w1 w2 sin^2 theta gives the small root accurately.
  out.lambda_minus = (w1 * w2 * sn * sn) / out.lambda_plus;
  out.rho = std::abs(1.0 - out.mu) + 0.5 * out.delta;
  return out;
}

namespace {

void check_two_by_two_args(double w1, double w2, double theta) {
  if (!std::isfinite(w1) || !(w1 > 0.0) || !std::isfinite(w2) || !(w2 > 0.0)) {
    throw DomainError("weights must be positive and finite");
  }
  if (!std::isfinite(theta) || is_degenerate_angle(theta)) {
    throw DomainError("parallel normals: singular A");
  }
}

}  // namespace

TwoByTwoSpectrum contraction_factor_2d(double w1, double w2, double theta) {
  check_two_by_two_args(w1, w2, theta);
  return two_by_two_spectrum_unchecked(w1, w2, theta);
}

double optimality_gap(double w1, double w2, double theta) {
  return contraction_factor_2d(w1, w2, theta).rho - std::abs(std::cos(theta));
}

bool is_optimal_gap(double gap) noexcept { return gap <= kOptimalGapTolerance; }

OptimalScaling optimal_scaling(const LinearSystem& sys, const WeightVector& w) {
  const SpectralReport r = spectral_radius_exact(sys, w);
  return {r.optimal_alpha, r.optimal_scaled_rate};
}

ConvergenceClass classify_convergence(const LinearSystem& sys, const WeightVector& w) {
  return spectral_radius_exact(sys, w).convergence;
}

bool is_tight_frame(const LinearSystem& sys, const WeightVector& w, double tol) {
  return near_identity(build_Bw(sys, w), tol);
}

std::vector<double> error_envelope(double rho, double e0_norm, std::size_t nu_max) {
  if (!std::isfinite(rho) || rho < 0.0) throw DomainError("rate must be finite and non-negative");
  if (!std::isfinite(e0_norm) || e0_norm < 0.0) {
    throw DomainError("initial error norm must be finite and non-negative");
  }
  std::vector<double> out(nu_max + 1);
  for (std::size_t nu = 0; nu <= nu_max; ++nu) out[nu] = e0_norm * std::pow(rho, static_cast<double>(nu));
  return out;
}

}  // namespace cimmino
