#pragma once

// Spectral analysis of the error map M_w = I - B_w, B_w = A^T D_w A.

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "cimmino/iteration.hpp"
#include "cimmino/linalg.hpp"
#include "cimmino/weights.hpp"

namespace cimmino {

enum class ConvergenceKind { Converges, Stalls, Diverges };

std::string_view to_string(ConvergenceKind kind) noexcept;

struct ConvergenceClass {
  ConvergenceKind kind;
  double rate;

  bool operator==(const ConvergenceClass&) const = default;
};

struct SpectralReport {
  std::size_t n = 0;
  std::vector<double> weights;
  /// Inter-normal angle, n = 2 only.
  std::optional<double> theta;
  /// Eigenvalues of B_w, ascending.
  std::vector<double> eigenvalues;
  double spectral_radius = 0.0;
  double condition_number = 0.0;
  ConvergenceClass convergence{ConvergenceKind::Converges, 0.0};
  double optimal_alpha = 0.0;
  double optimal_scaled_rate = 0.0;
  bool tight_frame = false;

  bool operator==(const SpectralReport&) const = default;
};

struct TwoByTwoSpectrum {
  double theta;
  double w1;
  double w2;
  double mu;            // (w1 + w2) / 2
  double s;             // (w1 - w2) / 2
  double delta;         // sqrt((w1 - w2)^2 + 4 w1 w2 cos^2 theta)
  double lambda_minus;  // mu - delta / 2
  double lambda_plus;   // mu + delta / 2
  double rho;           // |1 - mu| + delta / 2
};

struct OptimalScaling {
  double alpha_star;
  double rate;
};

inline constexpr double kStallTolerance = 1e-14;
inline constexpr double kSingularityRatio = 1e-14;
inline constexpr double kTightFrameTolerance = 1e-12;
inline constexpr double kOptimalGapTolerance = 1e-12;

/// B_w = sum_i w_i P_i.
DenseMatrix build_Bw(const LinearSystem& sys, const WeightVector& w);
/// M_w = I - B_w.
DenseMatrix build_Mw(const LinearSystem& sys, const WeightVector& w);

/// Eigenvalues of B_w, rate max(|1 - l_1|, |1 - l_n|), optimal scaling and
/// tight-frame flag. Throws SingularSystemError when l_1 <= 1e-14 * l_n.
SpectralReport spectral_radius_exact(const LinearSystem& sys, const WeightVector& w);

/// Closed form for n = 2 without argument checks; shared by the sweep kernels.
TwoByTwoSpectrum two_by_two_spectrum_unchecked(double w1, double w2, double theta) noexcept;

/// Closed-form n = 2 contraction factor. Throws DomainError for non-positive
/// weights, and for theta within 1e-12 of 0 or pi (parallel normals).
TwoByTwoSpectrum contraction_factor_2d(double w1, double w2, double theta);

/// rho(w1, w2, theta) - |cos theta|. Never meaningfully negative; values at
/// or below kOptimalGapTolerance mean the weights are optimal.
double optimality_gap(double w1, double w2, double theta);

bool is_optimal_gap(double gap) noexcept;

/// alpha* = 2 / (l_1 + l_n) and the resulting rate (kappa - 1) / (kappa + 1).
OptimalScaling optimal_scaling(const LinearSystem& sys, const WeightVector& w);

ConvergenceClass classify_convergence(const LinearSystem& sys, const WeightVector& w);

/// max |B_w - I| <= tol.
bool is_tight_frame(const LinearSystem& sys, const WeightVector& w,
                    double tol = kTightFrameTolerance);

/// e0_norm * rho^nu for nu = 0..nu_max.
std::vector<double> error_envelope(double rho, double e0_norm, std::size_t nu_max);

}  // namespace cimmino
