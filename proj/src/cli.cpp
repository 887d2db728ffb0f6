#include "cimmino/cli.hpp"

#include <charconv>
#include <cmath>
#include <numbers>
#include <optional>
#include <ostream>
#include <string_view>

#include <CLI11.hpp>

#include "cimmino/demos.hpp"
#include "cimmino/error.hpp"
#include "cimmino/io.hpp"
#include "cimmino/iteration.hpp"
#include "cimmino/spectral.hpp"
#include "cimmino/sweep.hpp"

namespace cimmino::cli {

std::vector<double> parse_real_list(const std::string& text) {
  std::vector<double> out;
  std::string_view rest = text;
  while (true) {
    const auto comma = rest.find(',');
    std::string_view tok = rest.substr(0, comma);
    while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
    while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
    if (!tok.empty() && tok.front() == '+') tok.remove_prefix(1);
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size() || !std::isfinite(v)) {
      throw DomainError("cannot parse '" + text + "' as a comma-separated list of reals");
    }
    out.push_back(v);
    if (comma == std::string_view::npos) return out;
    rest.remove_prefix(comma + 1);
  }
}

namespace {

std::string join(std::span<const double> values) {
  std::string s;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) s += ", ";
    s += io::format_real(values[i]);
  }
  return s;
}

WeightVector weights_or_unit(const std::string& text, std::size_t n) {
  if (text.empty()) return WeightVector::unit(n);
  WeightVector w(parse_real_list(text));
  if (w.size() != n) {
    throw DimensionError("expected " + std::to_string(n) + " weights, got " + std::to_string(w.size()));
  }
  return w;
}

Vector vector_or_zero(const std::string& text, std::size_t n, const char* what) {
  if (text.empty()) return Vector::zeros(n);
  Vector v(parse_real_list(text));
  if (v.size() != n) {
    throw DimensionError(std::string(what) + " has " + std::to_string(v.size()) +
                         " entries, expected " + std::to_string(n));
  }
  return v;
}

void emit(const std::string& path, const std::string& contents, std::ostream& out) {
  if (path == "-") {
    out << contents;
  } else {
    io::write_text_file(path, contents);
  }
}

struct SolveArgs {
  std::string matrix, rhs, weights, x0, solution, trace_out;
  double tol = kDefaultResidualTolerance;
  std::size_t max_iter = kDefaultMaxIterations;
};

int cmd_solve(const SolveArgs& a, std::ostream& out) {
  const LinearSystem sys(io::read_matrix_market(a.matrix), io::read_vector_market(a.rhs));
  const std::size_t n = sys.size();
  SolveOptions opts;
  opts.residual_tol = a.tol;
  opts.max_iter = a.max_iter;
  if (!a.solution.empty()) opts.known_solution = vector_or_zero(a.solution, n, "--solution");
  const IterationTrace trace =
      solve(sys, weights_or_unit(a.weights, n), vector_or_zero(a.x0, n, "--x0"), opts);
  if (!a.trace_out.empty()) io::write_trace_csv(trace, a.trace_out);

  out << "termination: " << to_string(trace.terminated) << "\n";
  out << "iterations: " << trace.steps() << "\n";
  out << "x: " << join(trace.final_iterate().values()) << "\n";
  out << "residual: " << io::format_real(trace.residual_norms.back()) << "\n";
  if (trace.error_norms) out << "error: " << io::format_real(trace.error_norms->back()) << "\n";

  switch (trace.terminated) {
    case Termination::Converged: return kSuccess;
    case Termination::MaxIterations: return kMaxIterations;
    case Termination::Diverged: return kDiverged;
  }
  return kInputError;
}

struct AnalyzeArgs {
  std::string matrix, weights, json_out;
};

int cmd_analyze(const AnalyzeArgs& a, std::ostream& out) {
  const DenseMatrix m = io::read_matrix_market(a.matrix);
  if (!m.is_square()) throw DimensionError("system matrix must be square");
  // The right-hand side does not enter the spectral analysis.
  const LinearSystem sys(m, Vector::zeros(m.rows()));
  const SpectralReport r = spectral_radius_exact(sys, weights_or_unit(a.weights, sys.size()));
  if (!a.json_out.empty()) io::write_report_json(r, a.json_out);

  out << "n: " << r.n << "\n";
  out << "weights: " << join(r.weights) << "\n";
  if (r.theta) {
    out << "theta_deg: " << io::format_real(*r.theta * 180.0 / std::numbers::pi) << "\n";
    out << "cos_theta: " << io::format_real(std::cos(*r.theta)) << "\n";
  }
  out << "eigenvalues: " << join(r.eigenvalues) << "\n";
  out << "spectral_radius: " << io::format_real(r.spectral_radius) << "\n";
  out << "condition_number: " << io::format_real(r.condition_number) << "\n";
  out << "class: " << to_string(r.convergence.kind) << "\n";
  out << "optimal_alpha: " << io::format_real(r.optimal_alpha) << "\n";
  out << "optimal_scaled_rate: " << io::format_real(r.optimal_scaled_rate) << "\n";
  out << "tight_frame: " << (r.tight_frame ? "true" : "false") << "\n";
  return kSuccess;
}

struct SweepArgs {
  std::string grid, weights, out_path;
};

std::vector<WeightPair> parse_pairs(const std::string& text) {
  std::vector<WeightPair> pairs;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto semi = text.find(';', start);
    const std::string chunk =
        text.substr(start, semi == std::string::npos ? std::string::npos : semi - start);
    const auto v = parse_real_list(chunk);
    if (v.size() != 2) throw DomainError("weight pair '" + chunk + "' must have exactly two entries");
    pairs.push_back({v[0], v[1]});
    if (semi == std::string::npos) break;
    start = semi + 1;
  }
  return pairs;
}

int cmd_sweep(const SweepArgs& a, std::ostream& out) {
  std::vector<double> bounds;
  {
    std::string g = a.grid;
    for (char& c : g)
      if (c == ':') c = ',';
    bounds = parse_real_list(g);
  }
  if (bounds.size() != 3) throw DomainError("--theta-grid must be start:stop:step (degrees)");
  const auto thetas = theta_grid_degrees(bounds[0], bounds[1], bounds[2]);
  const auto pairs = parse_pairs(a.weights);
  const SweepTable table = contraction_sweep(thetas, pairs);
  emit(a.out_path, io::render_sweep_csv(table), out);
  if (a.out_path != "-") {
    out << "wrote " << thetas.size() << " angles x " << pairs.size() << " weight pairs to "
        << a.out_path << "\n";
  }
  return kSuccess;
}

struct EnvelopeArgs {
  std::string rates, out_path;
  double e0 = 1.0;
  std::size_t steps = 12;
};

int cmd_envelope(const EnvelopeArgs& a, std::ostream& out) {
  const auto rates = parse_real_list(a.rates);
  const EnvelopeTable table = envelope_table(rates, a.e0, a.steps);
  emit(a.out_path, io::render_envelope_csv(table), out);
  if (a.out_path != "-") {
    out << "wrote " << (a.steps + 1) << " steps x " << rates.size() << " rates to " << a.out_path
        << "\n";
  }
  return kSuccess;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Cimmino reflection iteration: solver and spectral diagnostics", "cimmino"};
  app.require_subcommand(1);

  SolveArgs solve_args;
  auto* solve_cmd = app.add_subcommand("solve", "Iterate from x0 and report the termination class");
  solve_cmd->add_option("--matrix", solve_args.matrix, "Matrix Market file with A")->required();
  solve_cmd->add_option("--rhs", solve_args.rhs, "Matrix Market n x 1 array with b")->required();
  solve_cmd->add_option("--weights", solve_args.weights, "w1,w2,... (default all ones)");
  solve_cmd->add_option("--x0", solve_args.x0, "starting point (default zero)");
  solve_cmd->add_option("--tol", solve_args.tol, "relative residual tolerance")->capture_default_str();
  solve_cmd->add_option("--max-iter", solve_args.max_iter, "iteration budget")->capture_default_str();
  solve_cmd->add_option("--solution", solve_args.solution, "known solution for error columns");
  solve_cmd->add_option("--trace-out", solve_args.trace_out, "CSV trace path");

  AnalyzeArgs analyze_args;
  auto* analyze_cmd = app.add_subcommand("analyze", "Spectral report for the weighted iteration");
  analyze_cmd->add_option("--matrix", analyze_args.matrix, "Matrix Market file with A")->required();
  analyze_cmd->add_option("--weights", analyze_args.weights, "w1,w2,... (default all ones)");
  analyze_cmd->add_option("--json-out", analyze_args.json_out, "JSON report path");

  SweepArgs sweep_args;
  auto* sweep_cmd = app.add_subcommand("sweep", "Two-row contraction factor versus angle");
  sweep_cmd->add_option("--theta-grid", sweep_args.grid, "start:stop:step in degrees")->required();
  sweep_cmd->add_option("--weights", sweep_args.weights, "w1,w2[;w1,w2;...]")->required();
  sweep_cmd->add_option("--out", sweep_args.out_path, "CSV path, or - for stdout")->required();

  EnvelopeArgs envelope_args;
  auto* envelope_cmd = app.add_subcommand("envelope", "Error envelopes e0 * rho^nu");
  envelope_cmd->add_option("--rho", envelope_args.rates, "R[,R,...]")->required();
  envelope_cmd->add_option("--e0", envelope_args.e0, "initial error norm")->capture_default_str();
  envelope_cmd->add_option("--steps", envelope_args.steps, "last nu")->capture_default_str();
  envelope_cmd->add_option("--out", envelope_args.out_path, "CSV path, or - for stdout")->required();

  std::string demo_name;
  auto* demo_cmd = app.add_subcommand("demo", "Run a built-in reference configuration");
  demo_cmd->add_option("name", demo_name, "example1 | example2 | figure1 | figure2")->required();

  // CLI11 expects argv-style input in reverse order.
  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }

  try {
    if (*solve_cmd) return cmd_solve(solve_args, out);
    if (*analyze_cmd) return cmd_analyze(analyze_args, out);
    if (*sweep_cmd) return cmd_sweep(sweep_args, out);
    if (*envelope_cmd) return cmd_envelope(envelope_args, out);
    if (*demo_cmd) return demos::run(demo_name, out, err);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}

int run(int argc, char** argv, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run(args, out, err);
}

}  // namespace cimmino::cli
