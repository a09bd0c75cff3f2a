#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include <Eigen/Core>

#include "tda/persistence.hpp"

namespace tda {

/// Tent function of the interval: x - b on (b, (b+d)/2], d - x on ((b+d)/2, d),
/// 0 elsewhere. Throws BadInterval unless b < d.
Real triangle_function(Real birth, Real death, Real x);

struct CriticalPoint {
  Real x;
  Real value;
  friend bool operator==(const CriticalPoint&, const CriticalPoint&) = default;
};

/// Piecewise-linear levels λ_1 >= λ_2 >= ..., each stored by its critical
/// points (strictly increasing x) and zero outside their hull. Level k is
/// levels[k - 1].
struct Landscape {
  std::vector<std::vector<CriticalPoint>> levels;

  std::size_t level_count() const noexcept { return levels.size(); }
};

/// Exact landscape of finite intervals. Intervals with infinite death are
/// truncated at `essential_cutoff` when given and skipped otherwise;
/// zero-length intervals are skipped.
Landscape build_landscape(std::span<const Interval> intervals, std::optional<Real> essential_cutoff = std::nullopt);
Landscape build_landscape(const PersistenceDiagram& diagram, int dimension,
                          std::optional<Real> essential_cutoff = std::nullopt);

/// λ_k(x) by interpolation; 0 outside the support and for k past the last level.
Real evaluate_landscape(const Landscape& landscape, std::size_t k, Real x);

/// Pointwise mean per level, missing levels counted as zero. Throws EmptyInput.
Landscape average_landscapes(std::span<const Landscape> landscapes);

/// (Σ_k ∫ |λ_k − λ'_k|^p dx)^(1/p), integrated exactly on merged breakpoints;
/// p = infinity gives the sup norm. Throws BadExponent for p < 1.
Real landscape_distance(const Landscape& a, const Landscape& b, Real p);

/// Level values on a uniform x-grid, one row per level, for plotting.
Eigen::MatrixXd sample_landscape(const Landscape& landscape, Real x_min, Real x_max, Eigen::Index samples);

}  // namespace tda
