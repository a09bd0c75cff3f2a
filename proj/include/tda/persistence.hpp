#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "tda/filtered_complex.hpp"
#include "tda/types.hpp"

namespace tda {

/// Z2 column: strictly increasing row indices.
using Column = std::vector<Index>;

/// Symmetric difference of two sorted columns.
Column add_columns(const Column& a, const Column& b);

/// Boundary matrix of a sorted complex; column i holds the faces of cell i.
struct BoundaryMatrix {
  std::vector<Column> columns;
  std::vector<int> dims;
  std::vector<Real> filtrations;

  Index size() const noexcept { return static_cast<Index>(columns.size()); }
};

/// Throws UnsortedComplex unless complex.is_sorted().
BoundaryMatrix build_boundary_matrix(const FilteredComplex& complex);

enum class ReductionStrategy {
  LeftToRight,  // the standard pass: each column is reduced against finished ones
  RightToLeft,  // resolve conflicts from the last column backwards until none remain
};

struct ReduceOptions {
  ReductionStrategy strategy = ReductionStrategy::LeftToRight;
  /// Record which original columns were summed into each column (R = D V).
  bool track_cycles = false;
};

struct ReducedMatrix {
  std::vector<Column> columns;
  std::vector<std::optional<Index>> low;
  std::vector<std::pair<Index, Index>> pairs;  // (birth column, death column), ascending death
  std::vector<int> dims;
  std::vector<Real> filtrations;
  /// Column i of V when tracking was requested; empty otherwise.
  std::vector<Column> cycles;

  Index size() const noexcept { return static_cast<Index>(columns.size()); }
};

ReducedMatrix reduce(BoundaryMatrix matrix, const ReduceOptions& options = {});

struct DiagramPoint {
  int dimension = 0;
  Real birth = 0;
  Real death = kInfinity;
  /// Cell indices (sorted complex order) of a cycle carrying the class.
  std::vector<Index> representative;

  bool essential() const noexcept { return death == kInfinity; }
  Real persistence() const noexcept { return death - birth; }

  friend bool operator==(const DiagramPoint& a, const DiagramPoint& b) {
    return a.dimension == b.dimension && a.birth == b.birth && a.death == b.death;
  }
};

/// Planar (birth, death) pair of one homological dimension.
struct Interval {
  Real birth = 0;
  Real death = 0;

  Real persistence() const noexcept { return death - birth; }
  friend auto operator<=>(const Interval&, const Interval&) = default;
};

struct PersistenceDiagram {
  std::vector<DiagramPoint> points;

  /// Orders by (dimension, birth, death).
  void sort();
  std::vector<Interval> intervals(int dimension) const;
  int max_dimension() const;
};

struct ExtractOptions {
  bool keep_zero_length = false;
};

/// Paired points take their representative from the reduced killing column;
/// essential points from the tracked cycle column when available.
PersistenceDiagram extract_diagram(const ReducedMatrix& reduced, const ExtractOptions& options = {});

struct PersistenceOptions {
  ReduceOptions reduce;
  ExtractOptions extract;
  /// Drop points of dimension >= this (negative keeps everything).
  int max_homology_dimension = -1;
};

/// sort_cells, build_boundary_matrix, reduce, extract_diagram.
PersistenceDiagram compute_persistence(const FilteredComplex& complex, const PersistenceOptions& options = {});

/// Betti numbers of the whole complex, dimensions 0..max_dimension.
std::vector<Index> betti_numbers(const FilteredComplex& complex);

/// Betti numbers of the sublevel complex at t: points with birth <= t < death.
std::vector<Index> betti_at(const ReducedMatrix& reduced, Real t);
std::vector<Index> betti_at(const PersistenceDiagram& diagram, Real t, int max_dimension);

}  // namespace tda
