#include "cimmino/iteration.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "cimmino/error.hpp"
#include "cimmino/kernels.hpp"

namespace cimmino {

LinearSystem::LinearSystem(DenseMatrix a, Vector b) : a_(std::move(a)), b_(std::move(b)) {
  if (!a_.is_square()) throw DimensionError("system matrix must be square");
  if (b_.size() != a_.rows()) {
    throw DimensionError("right-hand side has length " + std::to_string(b_.size()) +
                         ", expected " + std::to_string(a_.rows()));
  }
  row_norm_sq_.resize(a_.rows());
  for (std::size_t i = 0; i < a_.rows(); ++i) {
    double sq = 0.0;
    for (double v : a_.row(i)) sq += v * v;
    if (!(sq > 0.0)) {
      throw DomainError("degenerate hyperplane row: row " + std::to_string(i + 1) + " is zero");
    }
    if (!std::isfinite(sq)) throw DomainError("row " + std::to_string(i + 1) + " norm overflows");
    row_norm_sq_[i] = sq;
  }
}

Hyperplane LinearSystem::hyperplane(std::size_t i) const {
  if (i >= size()) throw DimensionError("hyperplane index out of range");
  return Hyperplane(Vector(std::vector<double>(a_.row(i).begin(), a_.row(i).end())), b_[i]);
}

Vector residual(const LinearSystem& sys, const Vector& x) { return sys.rhs() - matvec(sys.matrix(), x); }

std::string_view to_string(Termination t) noexcept {
  switch (t) {
    case Termination::Converged: return "Converged";
    case Termination::MaxIterations: return "MaxIterations";
    case Termination::Diverged: return "Diverged";
  }
  return "Unknown";
}

namespace {

void check_step_inputs(const LinearSystem& sys, const Vector& x, std::size_t weights) {
  if (x.size() != sys.size()) {
    throw DimensionError("iterate has length " + std::to_string(x.size()) + ", expected " +
                         std::to_string(sys.size()));
  }
  if (weights != sys.size()) {
    throw DimensionError("expected " + std::to_string(sys.size()) + " weights, got " +
                         std::to_string(weights));
  }
}

}  // namespace

namespace {

std::vector<double> raw_step(const LinearSystem& sys, const Vector& x, const WeightVector& w) {
  std::vector<double> out(sys.size());
  kernels::omp::cimmino_update(sys.matrix().entries(), sys.size(), sys.size(), sys.rhs().values(),
                               sys.row_norm_sq(), w.values(), x.values(), out);
  return out;
}

}  // namespace

Vector cimmino_step(const LinearSystem& sys, const Vector& x, const WeightVector& w) {
  check_step_inputs(sys, x, w.size());
  return Vector(raw_step(sys, x, w));
}

Vector centroid_step(const LinearSystem& sys, const Vector& x, std::span<const double> masses) {
  check_step_inputs(sys, x, masses.size());
  double total = 0.0;
  for (double m : masses) {
    if (!std::isfinite(m) || !(m > 0.0)) throw DomainError("masses must be positive and finite");
    total += m;
  }
  std::vector<double> acc(sys.size(), 0.0);
  for (std::size_t i = 0; i < sys.size(); ++i) {
    const Vector q = reflect(x, sys.hyperplane(i));
    for (std::size_t j = 0; j < acc.size(); ++j) acc[j] += masses[i] * q[j];
  }
  for (double& v : acc) v /= total;
  return Vector(std::move(acc));
}

IterationTrace solve(const LinearSystem& sys, const WeightVector& w, const Vector& x0,
                     const SolveOptions& options) {
  if (!(options.residual_tol > 0.0) || !std::isfinite(options.residual_tol)) {
    throw DomainError("residual tolerance must be positive");
  }
  if (options.max_iter < 1) throw DomainError("max_iter must be at least 1");
  check_step_inputs(sys, x0, w.size());
  if (options.known_solution && options.known_solution->size() != sys.size()) {
    throw DimensionError("known solution has the wrong length");
  }

  const double stop = options.residual_tol * (1.0 + norm2(sys.rhs()));
  IterationTrace trace;
  if (options.known_solution) trace.error_norms.emplace();

  auto record = [&](Vector x) {
    trace.residual_norms.push_back(norm2(residual(sys, x)));
    if (options.known_solution) trace.error_norms->push_back(norm2(x - *options.known_solution));
    trace.iterates.push_back(std::move(x));
  };

  record(x0);
  if (trace.residual_norms.back() <= stop) {
    trace.terminated = Termination::Converged;
  } else {
    trace.terminated = Termination::MaxIterations;
    for (std::size_t nu = 0; nu < options.max_iter; ++nu) {
      std::vector<double> raw = raw_step(sys, trace.iterates.back(), w);
      // Overflow inside a single step counts as divergence too.
      if (!std::all_of(raw.begin(), raw.end(), [](double v) { return std::isfinite(v); })) {
        trace.terminated = Termination::Diverged;
        break;
      }
      Vector next(std::move(raw));
      const double size = norm2(next);
      record(std::move(next));
      if (trace.residual_norms.back() <= stop) {
        trace.terminated = Termination::Converged;
        break;
      }
      if (size > kDivergenceSentinel) {
        trace.terminated = Termination::Diverged;
        break;
      }
    }
  }

  if (trace.error_norms) {
    const auto& e = *trace.error_norms;
    trace.step_ratios.emplace();
    for (std::size_t k = 0; k + 1 < e.size(); ++k) {
      if (e[k] < kRatioUnderflow) {
        trace.step_ratios->push_back(std::nullopt);
      } else {
        trace.step_ratios->push_back(e[k + 1] / e[k]);
      }
    }
  }
  return trace;
}

std::vector<ErrorRow> error_sequence(const IterationTrace& trace) {
  if (!trace.error_norms) throw DomainError("known solution required");
  const auto& e = *trace.error_norms;
  std::vector<ErrorRow> rows;
  rows.reserve(e.size());
  for (std::size_t nu = 0; nu < e.size(); ++nu) {
    ErrorRow row{nu, e[nu], std::nullopt};
    if (nu > 0 && trace.step_ratios) row.ratio = (*trace.step_ratios)[nu - 1];
    rows.push_back(row);
  }
  return rows;
}

}  // namespace cimmino
