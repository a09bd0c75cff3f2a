#include "tda/io.hpp"

#include <cerrno>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "tda/error.hpp"

namespace tda::io {
namespace {

struct Line {
  std::size_t number;
  std::string_view text;
};

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

/// Non-blank, non-comment lines with their 1-based numbers.
std::vector<Line> content_lines(std::string_view text) {
  std::vector<Line> out;
  std::size_t number = 0;
  while (!text.empty()) {
    ++number;
    const auto end = text.find('\n');
    auto line = trim(text.substr(0, end));
    text = end == std::string_view::npos ? std::string_view{} : text.substr(end + 1);
    if (line.empty() || line.front() == '#') continue;
    out.push_back({number, line});
  }
  return out;
}

[[noreturn]] void fail(std::size_t line, const std::string& message) {
  throw Error(ErrorCode::ParseError, "line " + std::to_string(line) + ": " + message);
}

double parse_real(std::string_view token, std::size_t line) {
  token = trim(token);
  if (token.empty()) fail(line, "missing number");
  const std::string owned(token);
  char* end = nullptr;
  errno = 0;
  const double v = std::strtod(owned.c_str(), &end);
  if (end != owned.c_str() + owned.size() || errno == ERANGE || std::isnan(v))
    fail(line, "not a number: '" + owned + "'");
  return v;
}

long long parse_integer(std::string_view token, std::size_t line) {
  token = trim(token);
  long long v = 0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
  if (ec != std::errc() || ptr != token.data() + token.size())
    fail(line, "not an integer: '" + std::string(token) + "'");
  return v;
}

std::vector<double> split_reals(std::string_view text, char separator, std::size_t line) {
  std::vector<double> out;
  if (separator == ' ') {
    std::size_t pos = 0;
    while (pos < text.size()) {
      const auto start = text.find_first_not_of(" \t", pos);
      if (start == std::string_view::npos) break;
      const auto end = text.find_first_of(" \t", start);
      out.push_back(parse_real(text.substr(start, end - start), line));
      pos = end == std::string_view::npos ? text.size() : end;
    }
    return out;
  }
  while (true) {
    const auto comma = text.find(separator);
    out.push_back(parse_real(text.substr(0, comma), line));
    if (comma == std::string_view::npos) break;
    text = text.substr(comma + 1);
  }
  return out;
}

}  // namespace

PointCloud parse_point_cloud(std::string_view text) {
  const auto lines = content_lines(text);
  if (lines.empty()) throw Error(ErrorCode::ParseError, "empty point cloud");
  std::vector<std::vector<double>> rows;
  for (const auto& l : lines) {
    rows.push_back(split_reals(l.text, ',', l.number));
    if (rows.back().size() != rows.front().size())
      fail(l.number, "expected " + std::to_string(rows.front().size()) + " coordinates");
  }
  PointCloud out(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(rows.front().size()));
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j) out(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = rows[i][j];
  return out;
}

DistanceMatrix parse_distance_matrix(std::string_view text) {
  const auto lines = content_lines(text);
  if (lines.empty()) throw Error(ErrorCode::ParseError, "empty distance matrix");
  const auto n = parse_integer(lines[0].text, lines[0].number);
  if (n < 0) fail(lines[0].number, "negative size");
  if (static_cast<long long>(lines.size()) != n + 1)
    throw Error(ErrorCode::ParseError, "expected " + std::to_string(n) + " matrix rows");
  DistanceMatrix d(n, n);
  for (long long i = 0; i < n; ++i) {
    const auto& l = lines[static_cast<std::size_t>(i + 1)];
    const auto row = split_reals(l.text, ',', l.number);
    if (static_cast<long long>(row.size()) != n) fail(l.number, "expected " + std::to_string(n) + " entries");
    for (long long j = 0; j < n; ++j) d(i, j) = row[static_cast<std::size_t>(j)];
  }
  return d;
}

GridBitmap parse_grid(std::string_view text) {
  const auto lines = content_lines(text);
  if (lines.empty()) throw Error(ErrorCode::ParseError, "empty grid file");
  const auto k = parse_integer(lines[0].text, lines[0].number);
  if (k < 1) fail(lines[0].number, "ambient dimension must be >= 1");
  if (static_cast<long long>(lines.size()) < k + 1) throw Error(ErrorCode::ParseError, "missing extent lines");
  GridBitmap bitmap;
  for (long long a = 0; a < k; ++a) {
    const auto& l = lines[static_cast<std::size_t>(a + 1)];
    const auto extent = parse_integer(l.text, l.number);
    if (extent < 1) fail(l.number, "extent must be positive");
    bitmap.dims.push_back(extent);
  }
  const auto first_value = static_cast<std::size_t>(k + 1);
  if (static_cast<Index>(lines.size() - first_value) != bitmap.cell_count())
    throw Error(ErrorCode::ParseError, "expected " + std::to_string(bitmap.cell_count()) + " values, found " +
                                           std::to_string(lines.size() - first_value));
  bitmap.values.resize(bitmap.cell_count());
  for (std::size_t i = first_value; i < lines.size(); ++i)
    bitmap.values(static_cast<Eigen::Index>(i - first_value)) = parse_real(lines[i].text, lines[i].number);
  return bitmap;
}

Eigen::VectorXd parse_series(std::string_view text) {
  const auto lines = content_lines(text);
  if (lines.empty()) throw Error(ErrorCode::ParseError, "empty series");
  Eigen::VectorXd out(static_cast<Eigen::Index>(lines.size()));
  for (std::size_t i = 0; i < lines.size(); ++i) out(static_cast<Eigen::Index>(i)) = parse_real(lines[i].text, lines[i].number);
  return out;
}

PersistenceDiagram parse_diagram(std::string_view text) {
  PersistenceDiagram diagram;
  for (const auto& l : content_lines(text)) {
    const auto values = split_reals(l.text, ' ', l.number);
    if (values.size() != 3) fail(l.number, "expected 'dim birth death'");
    const double dim = values[0];
    if (dim < 0 || dim != static_cast<double>(static_cast<int>(dim))) fail(l.number, "dimension must be a non-negative integer");
    if (!(values[1] <= values[2])) fail(l.number, "death precedes birth");
    diagram.points.push_back({static_cast<int>(dim), values[1], values[2], {}});
  }
  diagram.sort();
  return diagram;
}

Landscape parse_landscape(std::string_view text) {
  Landscape out;
  for (const auto& l : content_lines(text)) {
    const auto values = split_reals(l.text, ' ', l.number);
    if (values.size() != 3) fail(l.number, "expected 'level x value'");
    const double level = values[0];
    if (level < 1 || level != static_cast<double>(static_cast<long long>(level))) fail(l.number, "level must be >= 1");
    const auto k = static_cast<std::size_t>(level);
    if (k > out.levels.size() + 1 || k < out.levels.size()) fail(l.number, "levels must be listed in order");
    if (k > out.levels.size()) out.levels.emplace_back();
    auto& lv = out.levels[k - 1];
    if (!lv.empty() && !(values[1] > lv.back().x)) fail(l.number, "x must increase within a level");
    lv.push_back({values[1], values[2]});
  }
  return out;
}

bool looks_like_landscape(std::string_view text) {
  const auto first = trim(text.substr(0, text.find('\n')));
  return first == "# level x value";
}

std::string format_real(double value) {
  if (value == kInfinity) return "inf";
  if (value == -kInfinity) return "-inf";
  std::ostringstream os;
  os << std::setprecision(17) << value;
  return os.str();
}

std::string format_diagram(const PersistenceDiagram& diagram) {
  auto sorted = diagram;
  sorted.sort();
  std::string out = "# dim birth death\n";
  for (const auto& p : sorted.points)
    out += std::to_string(p.dimension) + ' ' + format_real(p.birth) + ' ' + format_real(p.death) + '\n';
  return out;
}

std::string format_landscape(const Landscape& landscape) {
  std::string out = "# level x value\n";
  for (std::size_t k = 0; k < landscape.levels.size(); ++k)
    for (const auto& p : landscape.levels[k])
      out += std::to_string(k + 1) + ' ' + format_real(p.x) + ' ' + format_real(p.value) + '\n';
  return out;
}

std::string format_distance_matrix(const Eigen::MatrixXd& matrix) {
  std::string out = std::to_string(matrix.rows()) + '\n';
  for (Eigen::Index i = 0; i < matrix.rows(); ++i) {
    for (Eigen::Index j = 0; j < matrix.cols(); ++j) out += (j ? "," : "") + format_real(matrix(i, j));
    out += '\n';
  }
  return out;
}

std::string format_grid(const GridBitmap& bitmap) {
  std::string out = std::to_string(bitmap.dims.size()) + '\n';
  for (auto d : bitmap.dims) out += std::to_string(d) + '\n';
  for (Eigen::Index i = 0; i < bitmap.values.size(); ++i) out += format_real(bitmap.values(i)) + '\n';
  return out;
}

std::string format_heat_map(const HeatMap& map) {
  const char* mode = map.mode == HeatMapMode::Constant              ? "constant"
                     : map.mode == HeatMapMode::PersistenceWeighted ? "persistence"
                                                                     : "signed";
  std::string out = std::string("# heatmap mode=") + mode + " bandwidth=" + format_real(map.bandwidth) +
                    " truncation=" + format_real(map.truncation) + " window=" + format_real(map.window.birth_min) +
                    ',' + format_real(map.window.birth_max) + ',' + format_real(map.window.death_min) + ',' +
                    format_real(map.window.death_max) + " resolution=" + std::to_string(map.grid.rows()) + ',' +
                    std::to_string(map.grid.cols()) + "\n# rows: birth cells ascending; columns: death cells ascending\n";
  for (Eigen::Index i = 0; i < map.grid.rows(); ++i) {
    for (Eigen::Index j = 0; j < map.grid.cols(); ++j) out += (j ? "," : "") + format_real(map.grid(i, j));
    out += '\n';
  }
  return out;
}

std::string format_percolation(const std::vector<PercolationRow>& table) {
  std::size_t width = 0;
  for (const auto& row : table) width = std::max(width, row.mean_betti.size());
  std::string out = "p";
  for (std::size_t d = 0; d < width; ++d) out += ",betti" + std::to_string(d);
  out += '\n';
  for (const auto& row : table) {
    out += format_real(row.p);
    for (std::size_t d = 0; d < width; ++d) out += ',' + format_real(d < row.mean_betti.size() ? row.mean_betti[d] : 0.0);
    out += '\n';
  }
  return out;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file_atomic(const std::filesystem::path& path, std::string_view contents) {
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + tmp.string());
    out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
    if (!out) throw std::runtime_error("short write to " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

}  // namespace tda::io
