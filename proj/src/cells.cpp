#include "tda/cells.hpp"

#include <algorithm>
#include <string>

#include "tda/error.hpp"

namespace tda {

Simplex::Simplex(std::vector<std::int64_t> vertices) : vertices_(std::move(vertices)) {
  if (vertices_.empty()) throw Error(ErrorCode::InvalidArgument, "simplex needs at least one vertex");
  std::sort(vertices_.begin(), vertices_.end());
  if (vertices_.front() < 0) throw Error(ErrorCode::InvalidArgument, "negative vertex id");
  if (std::adjacent_find(vertices_.begin(), vertices_.end()) != vertices_.end())
    throw Error(ErrorCode::InvalidArgument, "repeated vertex in simplex");
}

int Cube::dimension() const noexcept {
  return static_cast<int>(
      std::count_if(coords_.begin(), coords_.end(), [](std::int64_t c) { return (c & 1) != 0; }));
}

std::vector<Simplex> boundary(const Simplex& s) {
  std::vector<Simplex> faces;
  const auto& v = s.vertices();
  if (v.size() < 2) return faces;
  faces.reserve(v.size());
  for (std::size_t skip = 0; skip < v.size(); ++skip) {
    std::vector<std::int64_t> face;
    face.reserve(v.size() - 1);
    for (std::size_t i = 0; i < v.size(); ++i)
      if (i != skip) face.push_back(v[i]);
    faces.emplace_back(std::move(face));
  }
  return faces;
}

std::vector<Cube> boundary(const Cube& c) {
  std::vector<Cube> faces;
  const auto& coords = c.coords();
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if ((coords[i] & 1) == 0) continue;
    auto lower = coords;
    auto upper = coords;
    lower[i] -= 1;
    upper[i] += 1;
    faces.emplace_back(std::move(lower));
    faces.emplace_back(std::move(upper));
  }
  return faces;
}

int dimension(const CellKey& key) {
  return std::visit([](const auto& cell) { return cell.dimension(); }, key);
}

std::vector<CellKey> boundary(const CellKey& key) {
  return std::visit(
      [](const auto& cell) {
        std::vector<CellKey> out;
        for (auto& face : boundary(cell)) out.emplace_back(std::move(face));
        return out;
      },
      key);
}

std::ostream& operator<<(std::ostream& os, const Simplex& s) {
  os << '[';
  for (std::size_t i = 0; i < s.vertices().size(); ++i) os << (i ? "," : "") << s.vertices()[i];
  return os << ']';
}

std::ostream& operator<<(std::ostream& os, const Cube& c) {
  os << '(';
  for (std::size_t i = 0; i < c.coords().size(); ++i) os << (i ? "," : "") << c.coords()[i];
  return os << ')';
}

std::ostream& operator<<(std::ostream& os, const CellKey& key) {
  std::visit([&os](const auto& cell) { os << cell; }, key);
  return os;
}

}  // namespace tda
