#pragma once

// The weighted Cimmino step, in algebraic form and as reflect-then-average,
// and a driver that records the iterate history.

#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "cimmino/geometry.hpp"
#include "cimmino/linalg.hpp"
#include "cimmino/weights.hpp"

namespace cimmino {

/// Square system A x = b with no zero rows. Nonsingularity is not checked
/// here; the spectral analysis detects it.
class LinearSystem {
 public:
  LinearSystem(DenseMatrix a, Vector b);

  const DenseMatrix& matrix() const noexcept { return a_; }
  const Vector& rhs() const noexcept { return b_; }
  std::size_t size() const noexcept { return b_.size(); }
  /// ||a_i||^2 for each row.
  std::span<const double> row_norm_sq() const noexcept { return row_norm_sq_; }
  Hyperplane hyperplane(std::size_t i) const;

  bool operator==(const LinearSystem&) const = default;

 private:
  DenseMatrix a_;
  Vector b_;
  std::vector<double> row_norm_sq_;
};

/// b - A x.
Vector residual(const LinearSystem& sys, const Vector& x);

enum class Termination { Converged, MaxIterations, Diverged };

std::string_view to_string(Termination t) noexcept;

struct IterationTrace {
  std::vector<Vector> iterates;
  std::vector<double> residual_norms;
  /// ||x^(nu) - xi||, present when a known solution was supplied.
  std::optional<std::vector<double>> error_norms;
  /// error_norms[nu+1] / error_norms[nu]; nullopt where the denominator
  /// is below 1e-300.
  std::optional<std::vector<std::optional<double>>> step_ratios;
  Termination terminated = Termination::MaxIterations;

  /// Number of steps taken (iterates.size() - 1).
  std::size_t steps() const noexcept { return iterates.empty() ? 0 : iterates.size() - 1; }
  const Vector& final_iterate() const { return iterates.back(); }
};

inline constexpr std::size_t kDefaultMaxIterations = 10'000;
inline constexpr double kDefaultResidualTolerance = 1e-10;
inline constexpr double kDivergenceSentinel = 1e150;
inline constexpr double kRatioUnderflow = 1e-300;

struct SolveOptions {
  /// Stop once ||b - A x|| <= residual_tol * (1 + ||b||).
  double residual_tol = kDefaultResidualTolerance;
  std::size_t max_iter = kDefaultMaxIterations;
  std::optional<Vector> known_solution{};
};

/// One weighted step x + A^T D_w (b - A x).
Vector cimmino_step(const LinearSystem& sys, const Vector& x, const WeightVector& w);

/// Reflect x across every row hyperplane, then take the mass-weighted
/// centroid of the reflections.
Vector centroid_step(const LinearSystem& sys, const Vector& x, std::span<const double> masses);

/// Iterates from x0 until the residual test passes (Converged), max_iter
/// steps were taken (MaxIterations), or ||x|| exceeds 1e150 (Diverged).
IterationTrace solve(const LinearSystem& sys, const WeightVector& w, const Vector& x0,
                     const SolveOptions& options = {});

struct ErrorRow {
  std::size_t nu;
  double error_norm;
  std::optional<double> ratio;
};

/// Flattened (nu, error, ratio-to-previous) table. Throws DomainError when
/// the trace has no error norms.
std::vector<ErrorRow> error_sequence(const IterationTrace& trace);

}  // namespace cimmino
