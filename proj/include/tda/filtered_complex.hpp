#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "tda/cells.hpp"
#include "tda/types.hpp"

namespace tda {

struct Cell {
  CellKey key;
  int dimension = 0;
  Real filtration = 0;
  std::vector<Index> boundary;  // indices of codimension-one faces
};

enum class Insertion {
  RequireFaces,  // every face must already be present
  WithClosure,   // missing faces are inserted at the same value, present ones lowered
};

/// Cells with filtration values and explicit face lists. Simplicial and cubical
/// cells share this container; the persistence code never looks at keys.
class FilteredComplex {
 public:
  /// Inserts a cell or lowers an existing one. A value above the stored one is
  /// ignored (the minimum is kept). Throws FiltrationViolation when the cell
  /// would enter before one of its faces and MissingFace when a face is absent
  /// under RequireFaces.
  Index insert(const CellKey& key, Real value, Insertion mode = Insertion::RequireFaces);

  /// Appends a cell whose face indices the caller already knows. No checks
  /// beyond key uniqueness; run validate_filtration afterwards.
  Index append(CellKey key, Real value, std::vector<Index> boundary);

  std::optional<Index> find(const CellKey& key) const;
  bool contains(const CellKey& key) const { return find(key).has_value(); }

  std::span<const Cell> cells() const noexcept { return cells_; }
  const Cell& operator[](Index i) const { return cells_[static_cast<std::size_t>(i)]; }
  Index size() const noexcept { return static_cast<Index>(cells_.size()); }
  bool empty() const noexcept { return cells_.empty(); }
  int max_dimension() const noexcept;

  void set_filtration(Index i, Real value) { cells_[static_cast<std::size_t>(i)].filtration = value; }

  /// Cofaces per cell, each list ascending.
  std::vector<std::vector<Index>> cofaces() const;

  /// True when cells follow (filtration, dimension, key) ascending and every
  /// face precedes its cofaces.
  bool is_sorted() const;

 private:
  std::vector<Cell> cells_;
  std::map<CellKey, Index> index_;
};

struct FiltrationViolationInfo {
  Index cell;
  Index face;
};

/// First cell (in storage order) whose value is below that of one of its faces.
std::optional<FiltrationViolationInfo> validate_filtration(const FilteredComplex& complex);

/// Filtration of a cell is the max over its vertices. Vertex values are keyed by
/// the vertex cell. Throws MissingVertexValue.
FilteredComplex lower_star_from_vertices(const FilteredComplex& complex,
                                         const std::map<CellKey, Real>& vertex_values);

/// Convenience overload for simplicial complexes keyed by vertex id.
FilteredComplex lower_star_from_vertices(const FilteredComplex& complex,
                                         const std::map<std::int64_t, Real>& vertex_values);

/// Filtration of a cell is the min over maximal cells whose closure contains it.
/// Every maximal cell (no cofaces) needs a value; throws MissingTopCellValue.
FilteredComplex filtration_from_top_cells(const FilteredComplex& complex,
                                          const std::map<CellKey, Real>& top_values);

struct SortedComplex {
  FilteredComplex complex;
  std::vector<Index> old_to_new;
};

/// Reorders cells by (filtration, dimension, key). Requires a valid filtration
/// (throws FiltrationViolation otherwise).
SortedComplex sort_cells(const FilteredComplex& complex);

}  // namespace tda
