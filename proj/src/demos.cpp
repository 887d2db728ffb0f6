#include "cimmino/demos.hpp"

#include <cmath>
#include <numbers>
#include <ostream>
#include <string>

#include "cimmino/geometry.hpp"
#include "cimmino/io.hpp"
#include "cimmino/spectral.hpp"

namespace cimmino::demos {

LinearSystem example1_system() {
  return LinearSystem(DenseMatrix::from_rows({{2.0, 1.0}, {1.0, 2.0}}), Vector{3.0, 3.0});
}

LinearSystem example2_system() {
  return LinearSystem(DenseMatrix::from_rows({{1.0, 1.0}, {1.0, -1.0}}), Vector{2.0, 0.0});
}

LinearSystem figure1_system() {
  return LinearSystem(DenseMatrix::from_rows({{1.0, 0.0}, {-0.5, std::sqrt(3.0) / 2.0}}),
                      Vector{0.0, 0.0});
}

std::vector<std::string_view> names() { return {"example1", "example2", "figure1", "figure2"}; }

namespace {

class Checker {
 public:
  explicit Checker(std::ostream& out) : out_(out) {}

  void near(const std::string& what, double expected, double computed, double tol) {
    const bool ok = std::abs(expected - computed) <= tol;
    out_ << (ok ? "  ok    " : "  FAIL  ") << what << ": expected " << io::format_real(expected)
         << ", computed " << io::format_real(computed) << " (tol " << io::format_real(tol) << ")\n";
    failures_ += ok ? 0 : 1;
  }

  void truth(const std::string& what, bool ok) {
    out_ << (ok ? "  ok    " : "  FAIL  ") << what << "\n";
    failures_ += ok ? 0 : 1;
  }

  int exit_code() const { return failures_ == 0 ? 0 : 1; }

 private:
  std::ostream& out_;
  int failures_ = 0;
};

int run_example1(std::ostream& out) {
  out << "example1: A = [[2, 1], [1, 2]], b = (3, 3), unit weights\n";
  Checker check(out);
  const LinearSystem sys = example1_system();
  const WeightVector w = WeightVector::unit(2);
  const double theta = internormal_angle(Vector{2.0, 1.0}, Vector{1.0, 2.0});
  check.near("cos theta", 0.8, std::cos(theta), 1e-15);
  const SpectralReport r = spectral_radius_exact(sys, w);
  check.near("lambda_1", 0.2, r.eigenvalues[0], 1e-12);
  check.near("lambda_2", 1.8, r.eigenvalues[1], 1e-12);
  check.near("rho(M)", 0.8, r.spectral_radius, 1e-12);
  check.near("optimal alpha", 1.0, r.optimal_alpha, 1e-12);
  const IterationTrace t = solve(sys, w, Vector::zeros(2), {.known_solution = Vector{1.0, 1.0}});
  check.truth("solve from (0, 0) converges", t.terminated == Termination::Converged);
  check.near("||x - (1, 1)|| after " + std::to_string(t.steps()) + " steps", 0.0,
             t.error_norms->back(), 1e-8);
  return check.exit_code();
}

int run_example2(std::ostream& out) {
  out << "example2: A = [[1, 1], [1, -1]], b = (2, 0), unit weights\n";
  Checker check(out);
  const LinearSystem sys = example2_system();
  const WeightVector w = WeightVector::unit(2);
  const Vector x1 = cimmino_step(sys, Vector{3.0, -1.0}, w);
  check.near("x1[0] from x0 = (3, -1)", 1.0, x1[0], 1e-14);
  check.near("x1[1] from x0 = (3, -1)", 1.0, x1[1], 1e-14);
  const SpectralReport r = spectral_radius_exact(sys, w);
  check.truth("tight frame (B_w = I)", r.tight_frame);
  check.near("rho(M)", 0.0, r.spectral_radius, 1e-14);
  return check.exit_code();
}

int run_figure1(std::ostream& out) {
  out << "figure1: normals at 120 degrees through the origin, x0 = (2, 0), unit weights\n";
  Checker check(out);
  const LinearSystem sys = figure1_system();
  const WeightVector w = WeightVector::unit(2);
  const double theta = internormal_angle(Vector{1.0, 0.0}, Vector{-0.5, std::sqrt(3.0) / 2.0});
  check.near("theta (degrees)", 120.0, theta * 180.0 / std::numbers::pi, 1e-12);
  const Vector x0{2.0, 0.0};
  for (std::size_t i = 0; i < 2; ++i) {
    check.near("||Q" + std::to_string(i + 1) + "|| (reflection stays on the circle)", 2.0,
               norm2(reflect(x0, sys.hyperplane(i))), 1e-12);
  }
  const Vector x1 = cimmino_step(sys, x0, w);
  const Vector x2 = cimmino_step(sys, x1, w);
  check.near("d1 = ||x0||", 2.0, norm2(x0), 1e-12);
  check.near("d2 = ||x1||", 1.0, norm2(x1), 1e-12);
  check.near("d3 = ||x2||", 0.5, norm2(x2), 1e-12);
  check.near("rho* = |cos theta|", 0.5, contraction_factor_2d(1.0, 1.0, theta).rho, 1e-12);
  return check.exit_code();
}

int run_figure2(std::ostream& out) {
  out << "figure2: error envelopes at 120 degrees, ||e0|| = 1\n";
  Checker check(out);
  const double theta = 2.0 * std::numbers::pi / 3.0;
  const double good = contraction_factor_2d(1.0, 1.0, theta).rho;
  const double poor = contraction_factor_2d(0.2, 0.2, theta).rho;
  check.near("rho at w = (1, 1)", 0.5, good, 1e-12);
  check.near("rho at w = (0.2, 0.2)", 0.9, poor, 1e-12);

  // Actual iterate errors through e <- M_w e, against the envelopes.
  const LinearSystem sys = figure1_system();
  const WeightVector unit = WeightVector::unit(2);
  const WeightVector small{0.2, 0.2};
  Vector e_good{1.0, 0.0};
  Vector e_poor{1.0, 0.0};
  bool dominated = true;
  for (int nu = 1; nu <= 12; ++nu) {
    e_good = cimmino_step(sys, e_good, unit);
    e_poor = cimmino_step(sys, e_poor, small);
    dominated = dominated && norm2(e_good) <= std::pow(good, nu) * (1.0 + 1e-9) &&
                norm2(e_poor) <= std::pow(poor, nu) * (1.0 + 1e-9);
  }
  check.truth("iterate errors stay under their envelopes for 12 steps", dominated);
  check.near("||e12|| at w = (1, 1)", std::pow(0.5, 12), norm2(e_good), 1e-15);
  const double gap = std::pow(poor, 12) / std::pow(good, 12);
  check.near("envelope gap 0.9^12 / 0.5^12", std::pow(1.8, 12), gap, 1e-6 * std::pow(1.8, 12));
  out << "  note  the twelve-step gap is about 1156.8, not about 180\n";
  return check.exit_code();
}

}  // namespace

int run(std::string_view name, std::ostream& out, std::ostream& err) {
  if (name == "example1") return run_example1(out);
  if (name == "example2") return run_example2(out);
  if (name == "figure1") return run_figure1(out);
  if (name == "figure2") return run_figure2(out);
  err << "unknown demo '" << name << "' (choose example1, example2, figure1, figure2)\n";
  return 1;
}

}  // namespace cimmino::demos
