#include "tda/persistence.hpp"

#include <algorithm>
#include <iterator>

#include "tda/error.hpp"

namespace tda {

Column add_columns(const Column& a, const Column& b) {
  Column out;
  out.reserve(a.size() + b.size());
  std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

BoundaryMatrix build_boundary_matrix(const FilteredComplex& complex) {
  if (!complex.is_sorted()) throw Error(ErrorCode::UnsortedComplex, "run sort_cells first");
  BoundaryMatrix m;
  m.columns.reserve(static_cast<std::size_t>(complex.size()));
  for (const auto& cell : complex.cells()) {
    m.columns.push_back(cell.boundary);
    std::sort(m.columns.back().begin(), m.columns.back().end());
    m.dims.push_back(cell.dimension);
    m.filtrations.push_back(cell.filtration);
  }
  return m;
}

namespace {

std::optional<Index> low_of(const Column& c) {
  if (c.empty()) return std::nullopt;
  return c.back();
}

void reduce_left_to_right(ReducedMatrix& r, bool track) {
  std::vector<Index> column_with_low(r.columns.size(), -1);
  for (std::size_t i = 0; i < r.columns.size(); ++i) {
    auto& col = r.columns[i];
    while (!col.empty()) {
      const Index j = column_with_low[static_cast<std::size_t>(col.back())];
      if (j < 0) break;
      col = add_columns(col, r.columns[static_cast<std::size_t>(j)]);
      if (track) r.cycles[i] = add_columns(r.cycles[i], r.cycles[static_cast<std::size_t>(j)]);
    }
    if (!col.empty()) column_with_low[static_cast<std::size_t>(col.back())] = static_cast<Index>(i);
  }
}

// Quadratic; meant for cross-checking the standard pass on small inputs.
void reduce_right_to_left(ReducedMatrix& r, bool track) {
  const auto n = static_cast<Index>(r.columns.size());
  bool changed = true;
  while (changed) {
    changed = false;
    for (Index i = n - 1; i >= 0; --i) {
      auto& col = r.columns[static_cast<std::size_t>(i)];
      for (Index j = i - 1; j >= 0 && !col.empty(); --j) {
        const auto& other = r.columns[static_cast<std::size_t>(j)];
        if (other.empty() || other.back() != col.back()) continue;
        col = add_columns(col, other);
        if (track)
          r.cycles[static_cast<std::size_t>(i)] =
              add_columns(r.cycles[static_cast<std::size_t>(i)], r.cycles[static_cast<std::size_t>(j)]);
        changed = true;
        j = i;  // restart the scan with the new low
      }
    }
  }
}

}  // namespace

ReducedMatrix reduce(BoundaryMatrix matrix, const ReduceOptions& options) {
  ReducedMatrix r;
  r.columns = std::move(matrix.columns);
  r.dims = std::move(matrix.dims);
  r.filtrations = std::move(matrix.filtrations);
  if (options.track_cycles) {
    r.cycles.resize(r.columns.size());
    for (std::size_t i = 0; i < r.cycles.size(); ++i) r.cycles[i] = {static_cast<Index>(i)};
  }

  if (options.strategy == ReductionStrategy::LeftToRight)
    reduce_left_to_right(r, options.track_cycles);
  else
    reduce_right_to_left(r, options.track_cycles);

  r.low.reserve(r.columns.size());
  for (std::size_t j = 0; j < r.columns.size(); ++j) {
    r.low.push_back(low_of(r.columns[j]));
    if (r.low.back()) r.pairs.emplace_back(*r.low.back(), static_cast<Index>(j));
  }
  return r;
}

void PersistenceDiagram::sort() {
  std::sort(points.begin(), points.end(), [](const DiagramPoint& a, const DiagramPoint& b) {
    if (a.dimension != b.dimension) return a.dimension < b.dimension;
    if (a.birth != b.birth) return a.birth < b.birth;
    return a.death < b.death;
  });
}

std::vector<Interval> PersistenceDiagram::intervals(int dimension) const {
  std::vector<Interval> out;
  for (const auto& p : points)
    if (p.dimension == dimension) out.push_back({p.birth, p.death});
  std::sort(out.begin(), out.end());
  return out;
}

int PersistenceDiagram::max_dimension() const {
  int best = -1;
  for (const auto& p : points) best = std::max(best, p.dimension);
  return best;
}

PersistenceDiagram extract_diagram(const ReducedMatrix& reduced, const ExtractOptions& options) {
  PersistenceDiagram diagram;
  std::vector<bool> is_birth(reduced.columns.size(), false);
  for (auto [birth, death] : reduced.pairs) {
    is_birth[static_cast<std::size_t>(birth)] = true;
    const Real b = reduced.filtrations[static_cast<std::size_t>(birth)];
    const Real d = reduced.filtrations[static_cast<std::size_t>(death)];
    if (b == d && !options.keep_zero_length) continue;
    diagram.points.push_back({reduced.dims[static_cast<std::size_t>(birth)], b, d,
                              reduced.columns[static_cast<std::size_t>(death)]});
  }
  for (std::size_t i = 0; i < reduced.columns.size(); ++i) {
    if (!reduced.columns[i].empty() || is_birth[i]) continue;
    DiagramPoint p{reduced.dims[i], reduced.filtrations[i], kInfinity, {}};
    if (!reduced.cycles.empty()) p.representative = reduced.cycles[i];
    diagram.points.push_back(std::move(p));
  }
  diagram.sort();
  return diagram;
}

PersistenceDiagram compute_persistence(const FilteredComplex& complex, const PersistenceOptions& options) {
  const FilteredComplex* sorted = &complex;
  SortedComplex owned;
  if (!complex.is_sorted()) {
    owned = sort_cells(complex);
    sorted = &owned.complex;
  }
  auto diagram = extract_diagram(reduce(build_boundary_matrix(*sorted), options.reduce), options.extract);
  if (options.max_homology_dimension >= 0)
    std::erase_if(diagram.points,
                  [&](const DiagramPoint& p) { return p.dimension >= options.max_homology_dimension; });
  return diagram;
}

std::vector<Index> betti_numbers(const FilteredComplex& complex) {
  std::vector<Index> betti(static_cast<std::size_t>(std::max(complex.max_dimension() + 1, 0)), 0);
  for (const auto& p : compute_persistence(complex).points)
    if (p.essential()) ++betti[static_cast<std::size_t>(p.dimension)];
  return betti;
}

std::vector<Index> betti_at(const PersistenceDiagram& diagram, Real t, int max_dimension) {
  std::vector<Index> betti(static_cast<std::size_t>(std::max(max_dimension + 1, 0)), 0);
  for (const auto& p : diagram.points)
    if (p.dimension <= max_dimension && p.birth <= t && (p.essential() || t < p.death)) ++betti[static_cast<std::size_t>(p.dimension)];
  return betti;
}

std::vector<Index> betti_at(const ReducedMatrix& reduced, Real t) {
  int top = -1;
  for (int d : reduced.dims) top = std::max(top, d);
  return betti_at(extract_diagram(reduced, {.keep_zero_length = true}), t, top);
}

}  // namespace tda
