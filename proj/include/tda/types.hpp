#pragma once

#include <cstdint>
#include <limits>

#include <Eigen/Core>

namespace tda {

using Real = double;
using Index = std::int64_t;

inline constexpr Real kInfinity = std::numeric_limits<Real>::infinity();

/// Row-per-point dense storage, templated on scalar the way the rest of the
/// numeric code is.
template <typename Scalar>
using PointCloudT = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using PointCloud = PointCloudT<Real>;

/// Symmetric, zero-diagonal, non-negative. Triangle inequality not required.
template <typename Scalar>
using DistanceMatrixT = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
using DistanceMatrix = DistanceMatrixT<Real>;

}  // namespace tda
