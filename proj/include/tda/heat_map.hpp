#pragma once

#include <optional>
#include <span>

#include <Eigen/Core>

#include "tda/persistence.hpp"

namespace tda {

enum class HeatMapMode {
  Constant,             // unit weight per point
  PersistenceWeighted,  // weight death - birth
  SignedSymmetric,      // +1 at (b, d), -1 at the mirrored (d, b)
};

struct HeatMapWindow {
  Real birth_min = 0, birth_max = 1;
  Real death_min = 0, death_max = 1;
};

struct HeatMap {
  /// grid(i, j): birth cell i, death cell j, sampled at cell centres.
  Eigen::MatrixXd grid;
  HeatMapWindow window;
  HeatMapMode mode = HeatMapMode::Constant;
  Real bandwidth = 1;
  Real truncation = 3;  // kernel support radius in bandwidths

  Real cell_area() const;
  Real birth_center(Eigen::Index i) const;
  Real death_center(Eigen::Index j) const;
};

struct HeatMapOptions {
  HeatMapWindow window;
  Eigen::Index birth_resolution = 50;
  Eigen::Index death_resolution = 50;
  Real bandwidth = 1;
  HeatMapMode mode = HeatMapMode::Constant;
  /// Kernels vanish beyond this many bandwidths; infinity keeps the whole window.
  Real truncation = 3;
  /// Truncation value for infinite deaths; essential points are skipped when unset.
  std::optional<Real> essential_cutoff;
};

/// Sum of normalised isotropic Gaussians centred on the diagram points.
/// Throws BadBandwidth.
HeatMap build_heat_map(std::span<const Interval> points, const HeatMapOptions& options);
HeatMap build_heat_map(const PersistenceDiagram& diagram, int dimension, const HeatMapOptions& options);

}  // namespace tda
