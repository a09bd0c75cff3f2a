#include "tda/filtered_complex.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "tda/error.hpp"

namespace tda {
namespace {

bool cell_less(const Cell& a, const Cell& b) {
  if (a.filtration != b.filtration) return a.filtration < b.filtration;
  if (a.dimension != b.dimension) return a.dimension < b.dimension;
  return a.key < b.key;
}

std::string describe(const CellKey& key) {
  std::ostringstream os;
  os << key;
  return os.str();
}

}  // namespace

Index FilteredComplex::insert(const CellKey& key, Real value, Insertion mode) {
  auto faces = boundary(key);
  std::vector<Index> face_ids;
  face_ids.reserve(faces.size());
  for (const auto& face : faces) {
    if (mode == Insertion::WithClosure) {
      face_ids.push_back(insert(face, value, Insertion::WithClosure));
      continue;
    }
    auto id = find(face);
    if (!id) throw Error(ErrorCode::MissingFace, "face " + describe(face) + " of " + describe(key));
    face_ids.push_back(*id);
  }
  auto existing = find(key);
  if (existing && cells_[static_cast<std::size_t>(*existing)].filtration <= value) return *existing;
  for (Index f : face_ids) {
    if (cells_[static_cast<std::size_t>(f)].filtration > value)
      throw Error(ErrorCode::FiltrationViolation,
                  describe(key) + " at " + std::to_string(value) + " precedes face " +
                      describe(cells_[static_cast<std::size_t>(f)].key));
  }
  if (existing) {
    cells_[static_cast<std::size_t>(*existing)].filtration = value;
    return *existing;
  }
  return append(key, value, std::move(face_ids));
}

Index FilteredComplex::append(CellKey key, Real value, std::vector<Index> boundary) {
  const Index id = size();
  auto [it, inserted] = index_.emplace(key, id);
  if (!inserted) throw Error(ErrorCode::InvalidArgument, "duplicate cell " + describe(key));
  const int dim = dimension(key);
  cells_.push_back(Cell{std::move(key), dim, value, std::move(boundary)});
  return id;
}

std::optional<Index> FilteredComplex::find(const CellKey& key) const {
  auto it = index_.find(key);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

int FilteredComplex::max_dimension() const noexcept {
  int best = -1;
  for (const auto& c : cells_) best = std::max(best, c.dimension);
  return best;
}

std::vector<std::vector<Index>> FilteredComplex::cofaces() const {
  std::vector<std::vector<Index>> out(cells_.size());
  for (std::size_t i = 0; i < cells_.size(); ++i)
    for (Index f : cells_[i].boundary) out[static_cast<std::size_t>(f)].push_back(static_cast<Index>(i));
  return out;
}

bool FilteredComplex::is_sorted() const {
  for (std::size_t i = 0; i < cells_.size(); ++i) {
    if (i > 0 && cell_less(cells_[i], cells_[i - 1])) return false;
    for (Index f : cells_[i].boundary)
      if (f >= static_cast<Index>(i)) return false;
  }
  return true;
}

std::optional<FiltrationViolationInfo> validate_filtration(const FilteredComplex& complex) {
  for (Index i = 0; i < complex.size(); ++i) {
    const auto& cell = complex[i];
    for (Index f : cell.boundary)
      if (complex[f].filtration > cell.filtration) return FiltrationViolationInfo{i, f};
  }
  return std::nullopt;
}

FilteredComplex lower_star_from_vertices(const FilteredComplex& complex,
                                         const std::map<CellKey, Real>& vertex_values) {
  FilteredComplex out = complex;
  // Faces may be stored after cofaces, so resolve by ascending dimension.
  std::vector<Index> order(static_cast<std::size_t>(complex.size()));
  std::iota(order.begin(), order.end(), Index{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](Index a, Index b) { return complex[a].dimension < complex[b].dimension; });
  for (Index i : order) {
    const auto& cell = complex[i];
    if (cell.dimension == 0) {
      auto it = vertex_values.find(cell.key);
      if (it == vertex_values.end())
        throw Error(ErrorCode::MissingVertexValue, "no value for vertex " + describe(cell.key));
      out.set_filtration(i, it->second);
      continue;
    }
    Real value = -kInfinity;
    for (Index f : cell.boundary) value = std::max(value, out[f].filtration);
    out.set_filtration(i, value);
  }
  return out;
}

FilteredComplex lower_star_from_vertices(const FilteredComplex& complex,
                                         const std::map<std::int64_t, Real>& vertex_values) {
  std::map<CellKey, Real> keyed;
  for (const auto& [v, value] : vertex_values) keyed.emplace(Simplex{v}, value);
  return lower_star_from_vertices(complex, keyed);
}

FilteredComplex filtration_from_top_cells(const FilteredComplex& complex,
                                          const std::map<CellKey, Real>& top_values) {
  FilteredComplex out = complex;
  const auto cofaces = complex.cofaces();
  std::vector<Index> order(static_cast<std::size_t>(complex.size()));
  std::iota(order.begin(), order.end(), Index{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](Index a, Index b) { return complex[a].dimension > complex[b].dimension; });
  for (Index i : order) {
    const auto& up = cofaces[static_cast<std::size_t>(i)];
    if (up.empty()) {
      auto it = top_values.find(complex[i].key);
      if (it == top_values.end())
        throw Error(ErrorCode::MissingTopCellValue, "no value for maximal cell " + describe(complex[i].key));
      out.set_filtration(i, it->second);
      continue;
    }
    Real value = kInfinity;
    for (Index c : up) value = std::min(value, out[c].filtration);
    out.set_filtration(i, value);
  }
  return out;
}

SortedComplex sort_cells(const FilteredComplex& complex) {
  if (auto bad = validate_filtration(complex))
    throw Error(ErrorCode::FiltrationViolation,
                "cell " + describe(complex[bad->cell].key) + " precedes its face " +
                    describe(complex[bad->face].key));
  const auto cells = complex.cells();
  std::vector<Index> order(cells.size());
  std::iota(order.begin(), order.end(), Index{0});
  std::sort(order.begin(), order.end(), [&](Index a, Index b) {
    return cell_less(cells[static_cast<std::size_t>(a)], cells[static_cast<std::size_t>(b)]);
  });

  SortedComplex result;
  result.old_to_new.assign(cells.size(), 0);
  for (std::size_t pos = 0; pos < order.size(); ++pos)
    result.old_to_new[static_cast<std::size_t>(order[pos])] = static_cast<Index>(pos);
  for (Index old : order) {
    const auto& cell = cells[static_cast<std::size_t>(old)];
    std::vector<Index> faces;
    faces.reserve(cell.boundary.size());
    for (Index f : cell.boundary) faces.push_back(result.old_to_new[static_cast<std::size_t>(f)]);
    std::sort(faces.begin(), faces.end());
    result.complex.append(cell.key, cell.filtration, std::move(faces));
  }
  return result;
}

}  // namespace tda
