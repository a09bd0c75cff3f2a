#pragma once

#include <cstdint>
#include <vector>

#include <Eigen/Core>

#include "tda/filtered_complex.hpp"
#include "tda/geometry.hpp"
#include "tda/types.hpp"

namespace tda {

/// Real values on the top-dimensional cubes of a grid, first axis fastest.
struct GridBitmap {
  std::vector<Index> dims;
  Eigen::VectorXd values;

  Index cell_count() const;
  /// Throws SizeMismatch when the value count differs from the product of dims.
  void check() const;
  /// All values exactly 0 or 1.
  bool is_binary() const;
};

/// Vertices at 0, edges at their length when within `max_edge_length`, higher
/// simplices up to `max_dimension` at the longest edge. Clique expansion runs
/// over lower neighbours.
FilteredComplex rips_from_distance_matrix(const DistanceMatrix& distances, Real max_edge_length,
                                          int max_dimension);

FilteredComplex rips_from_point_cloud(const PointCloud& points, Real max_edge_length, int max_dimension);

enum class BitmapMode {
  Auto,      // Presence when every value is 0 or 1, Sublevel otherwise
  Sublevel,  // full grid, faces take the min over incident top cubes
  Presence,  // cubes with value 1 and their faces only, all at filtration 1
};

FilteredComplex cubical_from_bitmap(const GridBitmap& bitmap, BitmapMode mode = BitmapMode::Auto);

/// Binary bitmap where each top cube is present (1) with probability p.
GridBitmap random_cubical(const std::vector<Index>& dims, double p, std::uint64_t seed);

struct PercolationRow {
  double p;
  std::vector<double> mean_betti;  // one entry per ambient dimension 0..k-1
};

/// Averages Betti numbers of random presence complexes. Trial t at grid
/// position i draws its bitmap from derive_seed(seed, i * trials + t).
std::vector<PercolationRow> percolation_sweep(const std::vector<Index>& dims, const std::vector<double>& p_grid,
                                              int trials, std::uint64_t seed);

/// Seed used by percolation_sweep for one (grid position, trial) pair.
std::uint64_t percolation_trial_seed(std::uint64_t seed, std::size_t grid_position, int trials, int trial);

struct PlanarGrid {
  double x_min = 0, x_max = 1;
  double y_min = 0, y_max = 1;
  Index nx = 1, ny = 1;

  double x_center(Index i) const { return x_min + (static_cast<double>(i) + 0.5) * (x_max - x_min) / static_cast<double>(nx); }
  double y_center(Index j) const { return y_min + (static_cast<double>(j) + 0.5) * (y_max - y_min) / static_cast<double>(ny); }
};

/// Negated Gaussian kernel density estimate at each cell centre; the bitmap has
/// dims (nx, ny) with x fastest. Density is normalised by sample count.
GridBitmap kde_grid_filtration(const PointCloud& points, const PlanarGrid& grid, double bandwidth);

/// |‖x‖ − 1| sampled on a (2N+1)² grid covering [−2,2]², the distance-to-unit
/// circle demo field.
GridBitmap circle_distance_bitmap(int half_resolution);

}  // namespace tda
