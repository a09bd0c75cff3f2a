#include "tda/heat_map.hpp"

#include <cmath>
#include <numbers>

#include "tda/error.hpp"

namespace tda {

Real HeatMap::cell_area() const {
  return (window.birth_max - window.birth_min) / static_cast<Real>(grid.rows()) *
         (window.death_max - window.death_min) / static_cast<Real>(grid.cols());
}

Real HeatMap::birth_center(Eigen::Index i) const {
  return window.birth_min + (static_cast<Real>(i) + 0.5) * (window.birth_max - window.birth_min) / static_cast<Real>(grid.rows());
}

Real HeatMap::death_center(Eigen::Index j) const {
  return window.death_min + (static_cast<Real>(j) + 0.5) * (window.death_max - window.death_min) / static_cast<Real>(grid.cols());
}

namespace {

void splat(HeatMap& map, Real b, Real d, Real weight) {
  const Real h = map.bandwidth;
  const Real norm = weight / (2 * std::numbers::pi * h * h);
  const Real radius = map.truncation * h;
  for (Eigen::Index i = 0; i < map.grid.rows(); ++i) {
    const Real db = map.birth_center(i) - b;
    if (std::abs(db) > radius) continue;
    for (Eigen::Index j = 0; j < map.grid.cols(); ++j) {
      const Real dd = map.death_center(j) - d;
      const Real r2 = db * db + dd * dd;
      if (r2 > radius * radius) continue;
      map.grid(i, j) += norm * std::exp(-r2 / (2 * h * h));
    }
  }
}

}  // namespace

HeatMap build_heat_map(std::span<const Interval> points, const HeatMapOptions& options) {
  if (!(options.bandwidth > 0)) throw Error(ErrorCode::BadBandwidth, "bandwidth must be positive");
  if (options.birth_resolution < 1 || options.death_resolution < 1)
    throw Error(ErrorCode::InvalidArgument, "resolution must be >= 1 per axis");
  if (!(options.window.birth_max > options.window.birth_min) || !(options.window.death_max > options.window.death_min))
    throw Error(ErrorCode::InvalidArgument, "empty heat map window");
  if (!(options.truncation > 0)) throw Error(ErrorCode::InvalidArgument, "truncation radius must be positive");

  HeatMap map;
  map.grid = Eigen::MatrixXd::Zero(options.birth_resolution, options.death_resolution);
  map.window = options.window;
  map.mode = options.mode;
  map.bandwidth = options.bandwidth;
  map.truncation = options.truncation;
  for (auto p : points) {
    if (p.death == kInfinity) {
      if (!options.essential_cutoff) continue;
      p.death = *options.essential_cutoff;
    }
    switch (options.mode) {
      case HeatMapMode::Constant:
        splat(map, p.birth, p.death, 1);
        break;
      case HeatMapMode::PersistenceWeighted:
        splat(map, p.birth, p.death, p.death - p.birth);
        break;
      case HeatMapMode::SignedSymmetric:
        splat(map, p.birth, p.death, 1);
        splat(map, p.death, p.birth, -1);
        break;
    }
  }
  return map;
}

HeatMap build_heat_map(const PersistenceDiagram& diagram, int dimension, const HeatMapOptions& options) {
  return build_heat_map(diagram.intervals(dimension), options);
}

}  // namespace tda
