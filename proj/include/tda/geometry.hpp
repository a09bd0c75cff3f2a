#pragma once

#include <cmath>

#include <Eigen/Core>

#include "tda/error.hpp"
#include "tda/types.hpp"

namespace tda {

/// Pairwise Euclidean distances between the rows of `points`.
template <typename Derived>
DistanceMatrixT<typename Derived::Scalar> euclidean_distances(const Eigen::MatrixBase<Derived>& points) {
  using Scalar = typename Derived::Scalar;
  const Eigen::Index n = points.rows();
  DistanceMatrixT<Scalar> d = DistanceMatrixT<Scalar>::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = i + 1; j < n; ++j) {
      const Scalar v = (points.row(i) - points.row(j)).norm();
      d(i, j) = v;
      d(j, i) = v;
    }
  return d;
}

/// Throws AsymmetricMatrix or NegativeEntry; a nonzero diagonal counts as
/// asymmetric input.
template <typename Derived>
void check_distance_matrix(const Eigen::MatrixBase<Derived>& d, double symmetry_tolerance = 1e-12) {
  if (d.rows() != d.cols()) throw Error(ErrorCode::AsymmetricMatrix, "distance matrix is not square");
  for (Eigen::Index i = 0; i < d.rows(); ++i) {
    if (d(i, i) != 0) throw Error(ErrorCode::AsymmetricMatrix, "nonzero diagonal entry");
    for (Eigen::Index j = 0; j < d.cols(); ++j) {
      if (!(d(i, j) >= 0)) throw Error(ErrorCode::NegativeEntry, "negative or NaN distance");
      if (std::abs(d(i, j) - d(j, i)) > symmetry_tolerance)
        throw Error(ErrorCode::AsymmetricMatrix, "entries (i,j) and (j,i) differ");
    }
  }
}

/// Windows of `window` consecutive samples: point i is
/// (values[i], ..., values[i + window - 1]); there are m - window + 1 points.
template <typename Derived>
PointCloudT<typename Derived::Scalar> sliding_window_embed(const Eigen::DenseBase<Derived>& values,
                                                            Eigen::Index window) {
  const Eigen::Index m = values.size();
  if (window < 1) throw Error(ErrorCode::InvalidArgument, "window must be at least 1");
  if (window > m) throw Error(ErrorCode::WindowTooLarge, "window exceeds series length");
  PointCloudT<typename Derived::Scalar> out(m - window + 1, window);
  for (Eigen::Index i = 0; i + window <= m; ++i)
    for (Eigen::Index j = 0; j < window; ++j) out(i, j) = values(i + j);
  return out;
}

}  // namespace tda
