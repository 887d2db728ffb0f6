#include "cimmino/io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <map>
#include <sstream>
#include <utility>

#include <json.hpp>

namespace cimmino::io {

std::string_view to_string(IoErrorKind kind) noexcept {
  switch (kind) {
    case IoErrorKind::Unreadable: return "unreadable file";
    case IoErrorKind::Unwritable: return "unwritable path";
    case IoErrorKind::MissingHeader: return "missing header";
    case IoErrorKind::MalformedHeader: return "malformed header";
    case IoErrorKind::UnsupportedField: return "unsupported field";
    case IoErrorKind::UnsupportedSymmetry: return "unsupported symmetry";
    case IoErrorKind::MalformedSizeLine: return "malformed size line";
    case IoErrorKind::DimensionOverflow: return "dimension overflow";
    case IoErrorKind::EntryCountMismatch: return "entry count mismatch";
    case IoErrorKind::MalformedEntry: return "malformed entry";
    case IoErrorKind::NonFiniteEntry: return "non-finite entry";
    case IoErrorKind::IndexOutOfRange: return "index out of range";
    case IoErrorKind::DuplicateCoordinate: return "duplicate coordinate";
    case IoErrorKind::MalformedCsv: return "malformed csv";
    case IoErrorKind::MalformedJson: return "malformed json";
  }
  return "io error";
}

IoError::IoError(IoErrorKind kind, const std::string& message)
    : Error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

namespace {

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return s;
}

std::vector<std::string> split_ws(const std::string& line) {
  std::istringstream is(line);
  std::vector<std::string> out;
  for (std::string tok; is >> tok;) out.push_back(tok);
  return out;
}

bool is_blank(const std::string& line) {
  return std::all_of(line.begin(), line.end(), [](unsigned char c) { return std::isspace(c); });
}

// Next line that is neither a comment nor blank.
bool next_data_line(std::istream& in, std::string& line) {
  while (std::getline(in, line)) {
    if (!line.empty() && line.front() == '%') continue;
    if (is_blank(line)) continue;
    return true;
  }
  return false;
}

std::optional<double> parse_double(std::string_view tok) {
  if (!tok.empty() && tok.front() == '+') tok.remove_prefix(1);
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc() || ptr != tok.data() + tok.size()) return std::nullopt;
  return v;
}

std::optional<std::size_t> parse_count(std::string_view tok) {
  std::size_t v = 0;
  const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc() || ptr != tok.data() + tok.size()) return std::nullopt;
  return v;
}

double parse_entry(const std::string& tok) {
  const auto v = parse_double(tok);
  if (!v) throw IoError(IoErrorKind::MalformedEntry, "cannot parse '" + tok + "' as a real number");
  if (!std::isfinite(*v)) throw IoError(IoErrorKind::NonFiniteEntry, "'" + tok + "'");
  return *v;
}

}  // namespace

DenseMatrix parse_matrix_market(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line.rfind("%%", 0) != 0) {
    throw IoError(IoErrorKind::MissingHeader, "expected a %%MatrixMarket banner on the first line");
  }
  const auto header = split_ws(line);
  if (header.size() != 5 || lower(header[0]) != "%%matrixmarket" || lower(header[1]) != "matrix") {
    throw IoError(IoErrorKind::MalformedHeader, "'" + line + "'");
  }
  const std::string format = lower(header[2]);
  const std::string field = lower(header[3]);
  const std::string symmetry = lower(header[4]);
  if (format != "array" && format != "coordinate") {
    throw IoError(IoErrorKind::MalformedHeader, "unknown storage format '" + header[2] + "'");
  }
  if (field == "complex" || field == "pattern" || field == "integer") {
    throw IoError(IoErrorKind::UnsupportedField, "field '" + header[3] + "' (only real is accepted)");
  }
  if (field != "real") throw IoError(IoErrorKind::MalformedHeader, "unknown field '" + header[3] + "'");
  if (symmetry == "skew-symmetric" || symmetry == "hermitian") {
    throw IoError(IoErrorKind::UnsupportedSymmetry, "'" + header[4] + "'");
  }
  if (symmetry != "general" && symmetry != "symmetric") {
    throw IoError(IoErrorKind::MalformedHeader, "unknown symmetry '" + header[4] + "'");
  }
  const bool coordinate = format == "coordinate";
  const bool symmetric = symmetry == "symmetric";

  if (!next_data_line(in, line)) throw IoError(IoErrorKind::MalformedSizeLine, "missing size line");
  const auto size_tokens = split_ws(line);
  if (size_tokens.size() != (coordinate ? 3u : 2u)) {
    throw IoError(IoErrorKind::MalformedSizeLine, "'" + line + "'");
  }
  std::vector<std::size_t> dims;
  for (const auto& tok : size_tokens) {
    const auto v = parse_count(tok);
    if (!v) throw IoError(IoErrorKind::MalformedSizeLine, "'" + line + "'");
    dims.push_back(*v);
  }
  const std::size_t rows = dims[0];
  const std::size_t cols = dims[1];
  if (rows == 0 || cols == 0) throw IoError(IoErrorKind::MalformedSizeLine, "zero dimension");
  if (rows > kMaxEntries / cols) {
    throw IoError(IoErrorKind::DimensionOverflow,
                  std::to_string(rows) + "x" + std::to_string(cols) + " exceeds the dense limit");
  }
  if (symmetric && rows != cols) throw IoError(IoErrorKind::MalformedSizeLine, "symmetric matrix must be square");

  std::vector<double> e(rows * cols, 0.0);
  if (!coordinate) {
    // Column-major; symmetric storage lists the lower triangle only.
    std::vector<std::pair<std::size_t, std::size_t>> slots;
    for (std::size_t j = 0; j < cols; ++j)
      for (std::size_t i = symmetric ? j : 0; i < rows; ++i) slots.emplace_back(i, j);
    std::size_t k = 0;
    while (next_data_line(in, line)) {
      for (const auto& tok : split_ws(line)) {
        if (k == slots.size()) {
          throw IoError(IoErrorKind::EntryCountMismatch,
                        "more than the expected " + std::to_string(slots.size()) + " entries");
        }
        const double v = parse_entry(tok);
        const auto [i, j] = slots[k++];
        e[i * cols + j] = v;
        if (symmetric) e[j * cols + i] = v;
      }
    }
    if (k != slots.size()) {
      throw IoError(IoErrorKind::EntryCountMismatch,
                    "expected " + std::to_string(slots.size()) + " entries, found " + std::to_string(k));
    }
  } else {
    const std::size_t nnz = dims[2];
    std::map<std::pair<std::size_t, std::size_t>, bool> seen;
    std::size_t k = 0;
    while (next_data_line(in, line)) {
      if (k == nnz) {
        throw IoError(IoErrorKind::EntryCountMismatch,
                      "more than the declared " + std::to_string(nnz) + " entries");
      }
      const auto toks = split_ws(line);
      if (toks.size() != 3) throw IoError(IoErrorKind::MalformedEntry, "'" + line + "'");
      const auto i = parse_count(toks[0]);
      const auto j = parse_count(toks[1]);
      if (!i || !j) throw IoError(IoErrorKind::MalformedEntry, "'" + line + "'");
      if (*i < 1 || *i > rows || *j < 1 || *j > cols) {
        throw IoError(IoErrorKind::IndexOutOfRange, "'" + line + "'");
      }
      const double v = parse_entry(toks[2]);
      auto key = std::make_pair(*i - 1, *j - 1);
      if (symmetric && key.first < key.second) std::swap(key.first, key.second);
      if (!seen.emplace(key, true).second) {
        throw IoError(IoErrorKind::DuplicateCoordinate,
                      "(" + toks[0] + ", " + toks[1] + ") listed more than once");
      }
      e[key.first * cols + key.second] = v;
      if (symmetric) e[key.second * cols + key.first] = v;
      ++k;
    }
    if (k != nnz) {
      throw IoError(IoErrorKind::EntryCountMismatch,
                    "declared " + std::to_string(nnz) + " entries, found " + std::to_string(k));
    }
  }
  return DenseMatrix(rows, cols, std::move(e));
}

DenseMatrix read_matrix_market(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError(IoErrorKind::Unreadable, path.string());
  return parse_matrix_market(in);
}

Vector read_vector_market(const std::filesystem::path& path) {
  const DenseMatrix m = read_matrix_market(path);
  if (m.cols() != 1) {
    throw IoError(IoErrorKind::MalformedSizeLine,
                  path.string() + ": right-hand side must be an n x 1 array");
  }
  return Vector(std::vector<double>(m.entries().begin(), m.entries().end()));
}

std::string format_real(double value) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value);
  return std::string(buf, ptr);
}

std::string render_matrix_market(const DenseMatrix& m) {
  std::string out = "%%MatrixMarket matrix array real general\n";
  out += std::to_string(m.rows()) + " " + std::to_string(m.cols()) + "\n";
  for (std::size_t j = 0; j < m.cols(); ++j)
    for (std::size_t i = 0; i < m.rows(); ++i) out += format_real(m(i, j)) + "\n";
  return out;
}

void write_matrix_market(const DenseMatrix& m, const std::filesystem::path& path) {
  write_text_file(path, render_matrix_market(m));
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError(IoErrorKind::Unreadable, path.string());
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_text_file(const std::filesystem::path& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError(IoErrorKind::Unwritable, path.string());
  out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
  out.flush();
  if (!out) throw IoError(IoErrorKind::Unwritable, path.string());
}

// ---------------------------------------------------------------------------
// CSV

namespace {

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back(line);
    pos = end + 1;
  }
  return lines;
}

std::vector<std::string_view> split_commas(std::string_view line) {
  std::vector<std::string_view> cells;
  std::size_t pos = 0;
  while (true) {
    const std::size_t end = line.find(',', pos);
    if (end == std::string_view::npos) {
      cells.push_back(line.substr(pos));
      return cells;
    }
    cells.push_back(line.substr(pos, end - pos));
    pos = end + 1;
  }
}

std::string optional_cell(const std::optional<double>& v) { return v ? format_real(*v) : std::string(); }

}  // namespace

std::size_t CsvTable::column(std::string_view name) const {
  for (std::size_t i = 0; i < header.size(); ++i)
    if (header[i] == name) return i;
  throw IoError(IoErrorKind::MalformedCsv, "no column named '" + std::string(name) + "'");
}

CsvTable parse_csv(std::string_view text) {
  const auto lines = split_lines(text);
  if (lines.empty()) throw IoError(IoErrorKind::MalformedCsv, "empty document");
  CsvTable table;
  for (auto cell : split_commas(lines.front())) table.header.emplace_back(cell);
  for (std::size_t k = 1; k < lines.size(); ++k) {
    if (lines[k].empty()) continue;
    const auto cells = split_commas(lines[k]);
    if (cells.size() != table.header.size()) {
      throw IoError(IoErrorKind::MalformedCsv, "line " + std::to_string(k + 1) + " has " +
                                                   std::to_string(cells.size()) + " cells");
    }
    std::vector<std::optional<double>> row;
    for (auto cell : cells) {
      if (cell.empty()) {
        row.emplace_back(std::nullopt);
        continue;
      }
      const auto v = parse_double(cell);
      if (!v) throw IoError(IoErrorKind::MalformedCsv, "bad number '" + std::string(cell) + "'");
      row.emplace_back(*v);
    }
    table.rows.push_back(std::move(row));
  }
  return table;
}

std::string render_trace_csv(const IterationTrace& trace) {
  std::string out = "iter,residual,error,ratio\n";
  for (std::size_t nu = 0; nu < trace.iterates.size(); ++nu) {
    std::optional<double> err;
    std::optional<double> ratio;
    if (trace.error_norms) err = (*trace.error_norms)[nu];
    if (nu > 0 && trace.step_ratios) ratio = (*trace.step_ratios)[nu - 1];
    out += std::to_string(nu) + "," + format_real(trace.residual_norms[nu]) + "," +
           optional_cell(err) + "," + optional_cell(ratio) + "\n";
  }
  return out;
}

void write_trace_csv(const IterationTrace& trace, const std::filesystem::path& path) {
  write_text_file(path, render_trace_csv(trace));
}

std::vector<TraceCsvRow> parse_trace_csv(std::string_view text) {
  const CsvTable table = parse_csv(text);
  const std::vector<std::string> expected{"iter", "residual", "error", "ratio"};
  if (table.header != expected) throw IoError(IoErrorKind::MalformedCsv, "unexpected trace header");
  std::vector<TraceCsvRow> rows;
  for (const auto& r : table.rows) {
    if (!r[0] || !r[1] || *r[0] < 0 || std::floor(*r[0]) != *r[0]) {
      throw IoError(IoErrorKind::MalformedCsv, "iter and residual are required");
    }
    rows.push_back({static_cast<std::size_t>(*r[0]), *r[1], r[2], r[3]});
  }
  return rows;
}

std::string render_sweep_csv(const SweepTable& table) {
  std::string out = "theta_deg,unit";
  for (const auto& p : table.pairs) out += ",rho_" + format_real(p.w1) + "_" + format_real(p.w2);
  out += "\n";
  for (std::size_t t = 0; t < table.theta_deg.size(); ++t) {
    out += format_real(table.theta_deg[t]) + "," + format_real(table.unit[t]);
    for (std::size_t p = 0; p < table.pairs.size(); ++p) out += "," + format_real(table.at(t, p));
    out += "\n";
  }
  return out;
}

std::string render_envelope_csv(const EnvelopeTable& table) {
  std::string out = "nu";
  for (double r : table.rates) out += ",rho_" + format_real(r);
  out += "\n";
  for (std::size_t nu = 0; nu <= table.steps; ++nu) {
    out += std::to_string(nu);
    for (const auto& env : table.envelopes) out += "," + format_real(env[nu]);
    out += "\n";
  }
  return out;
}

// ---------------------------------------------------------------------------
// JSON report

namespace {

std::string json_array(const std::vector<double>& values) {
  std::string out = "[";
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ", ";
    out += format_real(values[i]);
  }
  return out + "]";
}

}  // namespace

std::string render_report_json(const SpectralReport& r) {
  std::string out = "{\n";
  out += "  \"n\": " + std::to_string(r.n) + ",\n";
  out += "  \"weights\": " + json_array(r.weights) + ",\n";
  out += "  \"theta\": " + (r.theta ? format_real(*r.theta) : std::string("null")) + ",\n";
  out += "  \"eigenvalues\": " + json_array(r.eigenvalues) + ",\n";
  out += "  \"spectral_radius\": " + format_real(r.spectral_radius) + ",\n";
  out += "  \"condition_number\": " + format_real(r.condition_number) + ",\n";
  out += "  \"class\": \"" + std::string(to_string(r.convergence.kind)) + "\",\n";
  out += "  \"optimal_alpha\": " + format_real(r.optimal_alpha) + ",\n";
  out += "  \"optimal_scaled_rate\": " + format_real(r.optimal_scaled_rate) + ",\n";
  out += std::string("  \"tight_frame\": ") + (r.tight_frame ? "true" : "false") + "\n";
  out += "}\n";
  return out;
}

void write_report_json(const SpectralReport& report, const std::filesystem::path& path) {
  write_text_file(path, render_report_json(report));
}

SpectralReport parse_report_json(std::string_view text) {
  try {
    const auto j = nlohmann::json::parse(text);
    SpectralReport r;
    r.n = j.at("n").get<std::size_t>();
    r.weights = j.at("weights").get<std::vector<double>>();
    if (!j.at("theta").is_null()) r.theta = j.at("theta").get<double>();
    r.eigenvalues = j.at("eigenvalues").get<std::vector<double>>();
    r.spectral_radius = j.at("spectral_radius").get<double>();
    r.condition_number = j.at("condition_number").get<double>();
    const auto cls = j.at("class").get<std::string>();
    if (cls == "Converges") {
      r.convergence.kind = ConvergenceKind::Converges;
    } else if (cls == "Stalls") {
      r.convergence.kind = ConvergenceKind::Stalls;
    } else if (cls == "Diverges") {
      r.convergence.kind = ConvergenceKind::Diverges;
    } else {
      throw IoError(IoErrorKind::MalformedJson, "unknown class '" + cls + "'");
    }
    r.convergence.rate = r.spectral_radius;
    r.optimal_alpha = j.at("optimal_alpha").get<double>();
    r.optimal_scaled_rate = j.at("optimal_scaled_rate").get<double>();
    r.tight_frame = j.at("tight_frame").get<bool>();
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw IoError(IoErrorKind::MalformedJson, e.what());
  }
}

}  // namespace cimmino::io
