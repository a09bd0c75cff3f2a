#pragma once

#include <optional>
#include <span>
#include <vector>

#include <Eigen/Core>

#include "tda/persistence.hpp"

namespace tda {

struct MetricOptions {
  /// When set, infinite deaths are truncated to this value and the points are
  /// matched like finite ones. Otherwise essential points are matched only to
  /// essential points (|birth - birth'|) and unequal counts throw MixedEssential.
  std::optional<Real> essential_cutoff;
};

/// L-infinity distance between two planar points.
Real ground_distance(const Interval& a, const Interval& b);

/// L-infinity distance to the nearest diagonal point, (death - birth) / 2.
Real diagonal_distance(const Interval& a);

/// Exact bottleneck distance of two one-dimension diagrams augmented with the
/// diagonal. Binary search over candidate values with a bipartite matching test.
Real bottleneck_distance(std::span<const Interval> x, std::span<const Interval> y, const MetricOptions& options = {});

/// Exact q-Wasserstein distance (q >= 1) via an assignment problem on the
/// augmented cost matrix.
Real wasserstein_distance(std::span<const Interval> x, std::span<const Interval> y, Real q,
                          const MetricOptions& options = {});

Real bottleneck_distance(const PersistenceDiagram& x, const PersistenceDiagram& y, int dimension,
                         const MetricOptions& options = {});
Real wasserstein_distance(const PersistenceDiagram& x, const PersistenceDiagram& y, int dimension, Real q,
                          const MetricOptions& options = {});

/// Minimum-cost perfect assignment on a square cost matrix. Returns the column
/// assigned to each row.
std::vector<Eigen::Index> solve_assignment(const Eigen::MatrixXd& cost);

enum class DiagramMetric { Bottleneck, Wasserstein };

struct MetricSpec {
  DiagramMetric metric = DiagramMetric::Bottleneck;
  Real q = 1;
  int dimension = 0;
  MetricOptions options;
};

/// All-pairs distances; symmetric with a zero diagonal.
Eigen::MatrixXd distance_matrix(std::span<const PersistenceDiagram> diagrams, const MetricSpec& spec);

}  // namespace tda
