#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "spectrograph/spectral.hpp"

namespace spectrograph::io {

// All readers reject NaN and Inf and throw ParseError with a line number.

/// `%%MatrixMarket matrix coordinate {real|integer} general`; duplicate
/// coordinates are summed.
Eigen::MatrixXd read_matrix_market(std::istream& in);

/// Writes the nonzeros with 17 significant digits. Each comment line is
/// emitted as "% <comment>" after the banner.
void write_matrix_market(std::ostream& out, const Eigen::MatrixXd& matrix,
                         const std::vector<std::string>& comments = {});

/// One row per line, comma-separated, no header. Blank lines are skipped.
Eigen::MatrixXd read_dense_csv(std::istream& in);
void write_dense_csv(std::ostream& out, const Eigen::MatrixXd& matrix);

/// Matrix Market when the first line carries the banner, dense CSV otherwise.
AdjacencyMatrix read_adjacency(const std::filesystem::path& path);

/// One value per line. A file with commas is read as a dense grid and
/// flattened row-major, which matches grid2d's node numbering.
GraphSignal read_signal(std::istream& in);
GraphSignal read_signal(const std::filesystem::path& path);
void write_signal(std::ostream& out, const Eigen::VectorXd& signal);

/// Header line followed by numeric rows.
struct CsvTable {
  std::vector<std::string> header;
  Eigen::MatrixXd values;

  Eigen::VectorXd column(const std::string& name) const;
};
CsvTable read_csv_table(std::istream& in);
void write_csv_table(std::ostream& out, const CsvTable& table);

/// Shortest round-trippable fixed formatting used by every writer (%.17g).
std::string format_number(double value);

}  // namespace spectrograph::io
