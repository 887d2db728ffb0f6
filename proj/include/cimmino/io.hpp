#pragma once

// Matrix Market input; CSV trace and JSON report output. All writers are
// byte-deterministic: fixed column/field order, shortest round-trip float
// rendering, '\n' line endings.

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cimmino/error.hpp"
#include "cimmino/iteration.hpp"
#include "cimmino/linalg.hpp"
#include "cimmino/spectral.hpp"
#include "cimmino/sweep.hpp"

namespace cimmino::io {

enum class IoErrorKind {
  Unreadable,
  Unwritable,
  MissingHeader,
  MalformedHeader,
  UnsupportedField,     // complex, pattern, integer
  UnsupportedSymmetry,  // skew-symmetric, hermitian
  MalformedSizeLine,
  DimensionOverflow,    // more than kMaxEntries dense entries
  EntryCountMismatch,
  MalformedEntry,
  NonFiniteEntry,
  IndexOutOfRange,
  DuplicateCoordinate,
  MalformedCsv,
  MalformedJson,
};

std::string_view to_string(IoErrorKind kind) noexcept;

class IoError : public Error {
 public:
  IoError(IoErrorKind kind, const std::string& message);
  IoErrorKind kind() const noexcept { return kind_; }

 private:
  IoErrorKind kind_;
};

inline constexpr std::size_t kMaxEntries = 1'000'000;

/// Parses `%%MatrixMarket matrix (array|coordinate) real (general|symmetric)`.
/// Array data is column-major; symmetric storage lists the lower triangle
/// and is expanded. Unlisted coordinate entries are zero.
DenseMatrix parse_matrix_market(std::istream& in);
DenseMatrix read_matrix_market(const std::filesystem::path& path);

/// An n x 1 Matrix Market array file as a vector.
Vector read_vector_market(const std::filesystem::path& path);

std::string render_matrix_market(const DenseMatrix& m);
void write_matrix_market(const DenseMatrix& m, const std::filesystem::path& path);

/// Shortest decimal string that parses back to the same binary64 value.
std::string format_real(double value);

/// Header `iter,residual,error,ratio`; error/ratio cells are empty when
/// absent. Row nu carries error_norms[nu] / error_norms[nu-1].
std::string render_trace_csv(const IterationTrace& trace);
void write_trace_csv(const IterationTrace& trace, const std::filesystem::path& path);

struct TraceCsvRow {
  std::size_t iter;
  double residual;
  std::optional<double> error;
  std::optional<double> ratio;

  bool operator==(const TraceCsvRow&) const = default;
};

std::vector<TraceCsvRow> parse_trace_csv(std::string_view text);

/// Field order: n, weights, theta (null unless n = 2), eigenvalues,
/// spectral_radius, condition_number, class, optimal_alpha,
/// optimal_scaled_rate, tight_frame.
std::string render_report_json(const SpectralReport& report);
void write_report_json(const SpectralReport& report, const std::filesystem::path& path);
SpectralReport parse_report_json(std::string_view text);

/// Columns theta_deg, unit, then rho_<w1>_<w2> per weight pair.
std::string render_sweep_csv(const SweepTable& table);
/// Columns nu, then rho_<rate> per rate.
std::string render_envelope_csv(const EnvelopeTable& table);

/// Minimal CSV reader for the numeric tables above: header names plus
/// rows of optional values (empty cell = nullopt).
struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::optional<double>>> rows;

  std::size_t column(std::string_view name) const;
};

CsvTable parse_csv(std::string_view text);

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view contents);

}  // namespace cimmino::io
