#pragma once

#include "tda/persistence.hpp"
#include "tda/types.hpp"

namespace tda {

/// Persistence of the Vietoris-Rips filtration without materialising the
/// complex. Simplices are addressed by their combinatorial (colex) index and
/// coboundaries are enumerated on the fly; H0 comes from a union-find sweep
/// over edges, higher dimensions from a cohomology reduction with clearing.
///
/// Returns points of dimensions 0 .. max_dimension - 1, i.e. every dimension
/// whose homology the max_dimension-skeleton determines. The multiset of
/// (dimension, birth, death) with positive persistence equals what
/// compute_persistence(rips_from_distance_matrix(...)) reports in those
/// dimensions. Representatives are not recorded.
PersistenceDiagram rips_persistence(const DistanceMatrix& distances, Real max_edge_length, int max_dimension);

PersistenceDiagram rips_persistence(const PointCloud& points, Real max_edge_length, int max_dimension);

}  // namespace tda
