#include "spectrograph/io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <string_view>

#include <fmt/format.h>

#include "spectrograph/error.hpp"

namespace spectrograph::io {
namespace {

[[noreturn]] void parse_error(std::size_t line, const std::string& what) {
  throw Error(ErrorCode::ParseError, "line " + std::to_string(line) + ": " + what);
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

double parse_number(std::string_view token, std::size_t line) {
  token = trim(token);
  if (!token.empty() && token.front() == '+') token.remove_prefix(1);
  double value = 0.0;
  const auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (token.empty() || ec != std::errc() || end != token.data() + token.size()) {
    parse_error(line, "not a number: '" + std::string(token) + "'");
  }
  if (!std::isfinite(value)) parse_error(line, "NaN or Inf is not accepted");
  return value;
}

long long parse_integer(std::string_view token, std::size_t line) {
  token = trim(token);
  long long value = 0;
  const auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (token.empty() || ec != std::errc() || end != token.data() + token.size()) {
    parse_error(line, "not an integer: '" + std::string(token) + "'");
  }
  return value;
}

std::vector<std::string_view> split(std::string_view line, char delimiter) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = line.find(delimiter, start);
    fields.push_back(line.substr(start, pos == std::string_view::npos ? pos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return fields;
}

std::vector<std::string_view> split_whitespace(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    const std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i > start) fields.push_back(line.substr(start, i - start));
  }
  return fields;
}

std::string lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

Eigen::MatrixXd rows_to_matrix(const std::vector<std::vector<double>>& rows) {
  if (rows.empty()) return Eigen::MatrixXd(0, 0);
  Eigen::MatrixXd m(static_cast<Index>(rows.size()), static_cast<Index>(rows.front().size()));
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t c = 0; c < rows[r].size(); ++c) {
      m(static_cast<Index>(r), static_cast<Index>(c)) = rows[r][c];
    }
  }
  return m;
}

std::ifstream open_input(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::IoError, "cannot open '" + path.string() + "'");
  return in;
}

}  // namespace

std::string format_number(double value) { return fmt::format("{:.17g}", value); }

Eigen::MatrixXd read_matrix_market(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  if (!std::getline(in, line)) parse_error(1, "empty Matrix Market file");
  ++line_no;
  const auto banner = split_whitespace(line);
  if (banner.size() != 5 || banner[0] != "%%MatrixMarket") {
    parse_error(line_no, "missing %%MatrixMarket banner");
  }
  if (lower(banner[1]) != "matrix" || lower(banner[2]) != "coordinate") {
    parse_error(line_no, "only 'matrix coordinate' files are supported");
  }
  const std::string field = lower(banner[3]);
  if (field != "real" && field != "integer") {
    parse_error(line_no, "unsupported field '" + std::string(banner[3]) + "'");
  }
  if (lower(banner[4]) != "general") {
    parse_error(line_no, "unsupported symmetry '" + std::string(banner[4]) + "'");
  }

  long long rows = -1;
  long long cols = -1;
  long long entries = -1;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string_view body = trim(line);
    if (body.empty() || body.front() == '%') continue;
    const auto fields = split_whitespace(body);
    if (fields.size() != 3) parse_error(line_no, "expected 'rows cols entries'");
    rows = parse_integer(fields[0], line_no);
    cols = parse_integer(fields[1], line_no);
    entries = parse_integer(fields[2], line_no);
    break;
  }
  if (rows < 0 || cols < 0 || entries < 0) parse_error(line_no, "missing or negative size line");

  Eigen::MatrixXd matrix = Eigen::MatrixXd::Zero(rows, cols);
  long long seen = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string_view body = trim(line);
    if (body.empty() || body.front() == '%') continue;
    const auto fields = split_whitespace(body);
    if (fields.size() != 3) parse_error(line_no, "expected 'row col value'");
    const long long r = parse_integer(fields[0], line_no);
    const long long c = parse_integer(fields[1], line_no);
    if (r < 1 || r > rows || c < 1 || c > cols) parse_error(line_no, "coordinate out of range");
    if (++seen > entries) parse_error(line_no, "more entries than declared");
    matrix(r - 1, c - 1) += parse_number(fields[2], line_no);
  }
  if (seen != entries) {
    parse_error(line_no, "declared " + std::to_string(entries) + " entries, found " +
                             std::to_string(seen));
  }
  return matrix;
}

void write_matrix_market(std::ostream& out, const Eigen::MatrixXd& matrix,
                         const std::vector<std::string>& comments) {
  out << "%%MatrixMarket matrix coordinate real general\n";
  for (const auto& comment : comments) out << "% " << comment << '\n';
  Index nonzeros = 0;
  for (Index c = 0; c < matrix.cols(); ++c) {
    for (Index r = 0; r < matrix.rows(); ++r) nonzeros += matrix(r, c) != 0.0 ? 1 : 0;
  }
  out << matrix.rows() << ' ' << matrix.cols() << ' ' << nonzeros << '\n';
  for (Index c = 0; c < matrix.cols(); ++c) {
    for (Index r = 0; r < matrix.rows(); ++r) {
      if (matrix(r, c) != 0.0) {
        out << (r + 1) << ' ' << (c + 1) << ' ' << format_number(matrix(r, c)) << '\n';
      }
    }
  }
}

Eigen::MatrixXd read_dense_csv(std::istream& in) {
  std::vector<std::vector<double>> rows;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (trim(line).empty()) continue;
    std::vector<double> row;
    for (auto field : split(line, ',')) row.push_back(parse_number(field, line_no));
    if (!rows.empty() && row.size() != rows.front().size()) {
      parse_error(line_no, "row has " + std::to_string(row.size()) + " columns, expected " +
                               std::to_string(rows.front().size()));
    }
    rows.push_back(std::move(row));
  }
  return rows_to_matrix(rows);
}

void write_dense_csv(std::ostream& out, const Eigen::MatrixXd& matrix) {
  for (Index r = 0; r < matrix.rows(); ++r) {
    for (Index c = 0; c < matrix.cols(); ++c) {
      if (c > 0) out << ',';
      out << format_number(matrix(r, c));
    }
    out << '\n';
  }
}

AdjacencyMatrix read_adjacency(const std::filesystem::path& path) {
  std::ifstream in = open_input(path);
  std::string first;
  std::getline(in, first);
  in.clear();
  in.seekg(0);
  if (first.rfind("%%MatrixMarket", 0) == 0) return AdjacencyMatrix(read_matrix_market(in));
  return AdjacencyMatrix(read_dense_csv(in));
}

GraphSignal read_signal(std::istream& in) {
  const Eigen::MatrixXd grid = read_dense_csv(in);
  GraphSignal flat(grid.size());
  for (Index r = 0; r < grid.rows(); ++r) {
    for (Index c = 0; c < grid.cols(); ++c) flat(r * grid.cols() + c) = grid(r, c);
  }
  return flat;
}

GraphSignal read_signal(const std::filesystem::path& path) {
  std::ifstream in = open_input(path);
  return read_signal(in);
}

void write_signal(std::ostream& out, const Eigen::VectorXd& signal) {
  for (Index i = 0; i < signal.size(); ++i) out << format_number(signal(i)) << '\n';
}

Eigen::VectorXd CsvTable::column(const std::string& name) const {
  const auto it = std::find(header.begin(), header.end(), name);
  if (it == header.end()) throw Error(ErrorCode::InvalidArgument, "no column '" + name + "'");
  return values.col(it - header.begin());
}

CsvTable read_csv_table(std::istream& in) {
  CsvTable table;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (trim(line).empty()) continue;
    for (auto field : split(line, ',')) table.header.emplace_back(trim(field));
    break;
  }
  if (table.header.empty()) parse_error(line_no, "missing CSV header");
  std::vector<std::vector<double>> rows;
  while (std::getline(in, line)) {
    ++line_no;
    if (trim(line).empty()) continue;
    std::vector<double> row;
    for (auto field : split(line, ',')) row.push_back(parse_number(field, line_no));
    if (row.size() != table.header.size()) parse_error(line_no, "column count differs from header");
    rows.push_back(std::move(row));
  }
  table.values = rows_to_matrix(rows);
  if (rows.empty()) table.values.resize(0, static_cast<Index>(table.header.size()));
  return table;
}

void write_csv_table(std::ostream& out, const CsvTable& table) {
  for (std::size_t c = 0; c < table.header.size(); ++c) {
    if (c > 0) out << ',';
    out << table.header[c];
  }
  out << '\n';
  write_dense_csv(out, table.values);
}

}  // namespace spectrograph::io
