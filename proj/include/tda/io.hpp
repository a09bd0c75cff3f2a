#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Core>

#include "tda/builders.hpp"
#include "tda/heat_map.hpp"
#include "tda/landscape.hpp"
#include "tda/persistence.hpp"

namespace tda::io {

// Text formats. Blank lines and lines starting with '#' are ignored on input
// unless stated otherwise. Malformed input throws ParseError naming the line.

/// One point per line, comma-separated coordinates.
PointCloud parse_point_cloud(std::string_view text);
/// First line n, then n lines of n comma-separated reals.
DistanceMatrix parse_distance_matrix(std::string_view text);
/// Ambient dimension k, k extent lines (first axis fastest), one value per line.
GridBitmap parse_grid(std::string_view text);
/// One real per line.
Eigen::VectorXd parse_series(std::string_view text);
/// `# dim birth death` header, then whitespace-separated triples; `inf` deaths.
PersistenceDiagram parse_diagram(std::string_view text);
/// `# level x value` header, then one critical point per line.
Landscape parse_landscape(std::string_view text);

std::string format_real(double value);
std::string format_diagram(const PersistenceDiagram& diagram);
std::string format_landscape(const Landscape& landscape);
std::string format_distance_matrix(const Eigen::MatrixXd& matrix);
std::string format_grid(const GridBitmap& bitmap);
std::string format_heat_map(const HeatMap& map);
std::string format_percolation(const std::vector<PercolationRow>& table);

bool looks_like_landscape(std::string_view text);

std::string read_file(const std::filesystem::path& path);
/// Writes through a temporary sibling file and renames it into place.
void write_file_atomic(const std::filesystem::path& path, std::string_view contents);

}  // namespace tda::io
