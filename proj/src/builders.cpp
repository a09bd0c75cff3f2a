#include "tda/builders.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <string>

#include "tda/error.hpp"
#include "tda/persistence.hpp"
#include "tda/random.hpp"

namespace tda {

Index GridBitmap::cell_count() const {
  Index n = 1;
  for (Index d : dims) n *= d;
  return dims.empty() ? 0 : n;
}

void GridBitmap::check() const {
  if (dims.empty()) throw Error(ErrorCode::SizeMismatch, "bitmap has no extents");
  for (Index d : dims)
    if (d < 1) throw Error(ErrorCode::SizeMismatch, "bitmap extents must be positive");
  if (cell_count() != values.size())
    throw Error(ErrorCode::SizeMismatch, "expected " + std::to_string(cell_count()) + " values, got " +
                                             std::to_string(values.size()));
}

bool GridBitmap::is_binary() const {
  return std::all_of(values.begin(), values.end(), [](double v) { return v == 0.0 || v == 1.0; });
}

FilteredComplex rips_from_distance_matrix(const DistanceMatrix& distances, Real max_edge_length,
                                          int max_dimension) {
  check_distance_matrix(distances);
  if (!(max_edge_length >= 0)) throw Error(ErrorCode::InvalidArgument, "max edge length must be >= 0");
  if (max_dimension < 1) throw Error(ErrorCode::InvalidArgument, "max dimension must be >= 1");

  const auto n = static_cast<std::int64_t>(distances.rows());
  std::vector<std::vector<std::int64_t>> lower(static_cast<std::size_t>(n));
  for (std::int64_t v = 0; v < n; ++v)
    for (std::int64_t u = 0; u < v; ++u)
      if (distances(u, v) <= max_edge_length) lower[static_cast<std::size_t>(v)].push_back(u);

  // Each simplex is produced once, from its largest vertex downwards.
  std::vector<std::vector<std::vector<std::int64_t>>> by_dim(static_cast<std::size_t>(max_dimension) + 1);
  std::vector<std::int64_t> tau;
  std::function<void(const std::vector<std::int64_t>&)> expand = [&](const std::vector<std::int64_t>& candidates) {
    by_dim[tau.size() - 1].push_back(tau);
    if (static_cast<int>(tau.size()) - 1 >= max_dimension) return;
    for (std::int64_t v : candidates) {
      const auto& nv = lower[static_cast<std::size_t>(v)];
      std::vector<std::int64_t> common;
      std::set_intersection(candidates.begin(), candidates.end(), nv.begin(), nv.end(), std::back_inserter(common));
      tau.push_back(v);
      expand(common);
      tau.pop_back();
    }
  };
  for (std::int64_t v = 0; v < n; ++v) {
    tau.assign(1, v);
    expand(lower[static_cast<std::size_t>(v)]);
  }

  FilteredComplex complex;
  for (auto& level : by_dim) {
    for (auto& vertices : level) {
      Real value = 0;
      for (std::size_t i = 0; i < vertices.size(); ++i)
        for (std::size_t j = i + 1; j < vertices.size(); ++j)
          value = std::max(value, distances(vertices[i], vertices[j]));
      complex.insert(Simplex(std::move(vertices)), value);
    }
  }
  return complex;
}

FilteredComplex rips_from_point_cloud(const PointCloud& points, Real max_edge_length, int max_dimension) {
  return rips_from_distance_matrix(euclidean_distances(points), max_edge_length, max_dimension);
}

namespace {

struct GridShape {
  std::vector<Index> extents;  // doubled grid, 2d+1 per axis
  std::vector<Index> strides;
  Index total = 1;

  explicit GridShape(const std::vector<Index>& dims) {
    for (Index d : dims) {
      strides.push_back(total);
      extents.push_back(2 * d + 1);
      total *= 2 * d + 1;
    }
  }

  std::vector<std::int64_t> coords(Index linear) const {
    std::vector<std::int64_t> c(extents.size());
    for (std::size_t a = 0; a < extents.size(); ++a) {
      c[a] = linear % extents[a];
      linear /= extents[a];
    }
    return c;
  }
};

Index top_cell_index(const std::vector<std::int64_t>& coords, const std::vector<Index>& dims) {
  Index idx = 0, stride = 1;
  for (std::size_t a = 0; a < dims.size(); ++a) {
    idx += ((coords[a] - 1) / 2) * stride;
    stride *= dims[a];
  }
  return idx;
}

/// Calls visit(top index) for every top cube whose closure contains the cell.
template <typename Visit>
void for_each_incident_top(const std::vector<std::int64_t>& coords, const std::vector<Index>& dims, Visit&& visit) {
  std::vector<std::int64_t> top = coords;
  std::function<void(std::size_t)> rec = [&](std::size_t axis) {
    if (axis == coords.size()) {
      visit(top_cell_index(top, dims));
      return;
    }
    if (coords[axis] & 1) {
      top[axis] = coords[axis];
      rec(axis + 1);
      return;
    }
    for (std::int64_t t : {coords[axis] - 1, coords[axis] + 1}) {
      if (t < 1 || t > 2 * dims[axis] - 1) continue;
      top[axis] = t;
      rec(axis + 1);
    }
  };
  rec(0);
}

}  // namespace

FilteredComplex cubical_from_bitmap(const GridBitmap& bitmap, BitmapMode mode) {
  bitmap.check();
  if (mode == BitmapMode::Auto) mode = bitmap.is_binary() ? BitmapMode::Presence : BitmapMode::Sublevel;
  if (mode == BitmapMode::Presence && !bitmap.is_binary())
    throw Error(ErrorCode::InvalidArgument, "presence mode needs a 0/1 bitmap");

  const GridShape shape(bitmap.dims);
  std::vector<Index> slot(static_cast<std::size_t>(shape.total), -1);
  std::vector<Real> value(static_cast<std::size_t>(shape.total), kInfinity);
  for (Index linear = 0; linear < shape.total; ++linear) {
    const auto c = shape.coords(linear);
    Real v = kInfinity;
    bool present = false;
    for_each_incident_top(c, bitmap.dims, [&](Index top) {
      const double x = bitmap.values(top);
      v = std::min(v, x);
      present = present || x == 1.0;
    });
    if (mode == BitmapMode::Presence) {
      if (!present) continue;
      v = 1.0;
    }
    value[static_cast<std::size_t>(linear)] = v;
    slot[static_cast<std::size_t>(linear)] = 0;
  }

  Index next = 0;
  for (auto& s : slot)
    if (s == 0) s = next++;

  FilteredComplex complex;
  for (Index linear = 0; linear < shape.total; ++linear) {
    if (slot[static_cast<std::size_t>(linear)] < 0) continue;
    auto c = shape.coords(linear);
    std::vector<Index> faces;
    for (std::size_t a = 0; a < c.size(); ++a) {
      if ((c[a] & 1) == 0) continue;
      faces.push_back(slot[static_cast<std::size_t>(linear - shape.strides[a])]);
      faces.push_back(slot[static_cast<std::size_t>(linear + shape.strides[a])]);
    }
    complex.append(Cube(std::move(c)), value[static_cast<std::size_t>(linear)], std::move(faces));
  }
  return complex;
}

GridBitmap random_cubical(const std::vector<Index>& dims, double p, std::uint64_t seed) {
  if (!(p >= 0.0 && p <= 1.0)) throw Error(ErrorCode::BadProbability, "p must lie in [0, 1]");
  GridBitmap bitmap{dims, {}};
  Index n = 1;
  for (Index d : dims) {
    if (d < 1) throw Error(ErrorCode::SizeMismatch, "bitmap extents must be positive");
    n *= d;
  }
  bitmap.values.resize(n);
  Rng rng(seed);
  for (Index i = 0; i < n; ++i) bitmap.values(i) = rng.uniform() < p ? 1.0 : 0.0;
  return bitmap;
}

std::uint64_t percolation_trial_seed(std::uint64_t seed, std::size_t grid_position, int trials, int trial) {
  return derive_seed(seed, static_cast<std::uint64_t>(grid_position) * static_cast<std::uint64_t>(trials) +
                               static_cast<std::uint64_t>(trial));
}

std::vector<PercolationRow> percolation_sweep(const std::vector<Index>& dims, const std::vector<double>& p_grid,
                                              int trials, std::uint64_t seed) {
  if (trials < 1) throw Error(ErrorCode::InvalidArgument, "trials must be >= 1");
  if (!std::is_sorted(p_grid.begin(), p_grid.end()))
    throw Error(ErrorCode::InvalidArgument, "probability grid must be sorted");
  for (double p : p_grid)
    if (!(p >= 0.0 && p <= 1.0)) throw Error(ErrorCode::BadProbability, "p must lie in [0, 1]");

  const std::size_t ambient = dims.size();
  std::vector<PercolationRow> table;
  for (std::size_t i = 0; i < p_grid.size(); ++i) {
    PercolationRow row{p_grid[i], std::vector<double>(ambient, 0.0)};
    for (int t = 0; t < trials; ++t) {
      const auto bitmap = random_cubical(dims, p_grid[i], percolation_trial_seed(seed, i, trials, t));
      const auto betti = betti_numbers(cubical_from_bitmap(bitmap, BitmapMode::Presence));
      for (std::size_t d = 0; d < ambient && d < betti.size(); ++d) row.mean_betti[d] += static_cast<double>(betti[d]);
    }
    for (auto& b : row.mean_betti) b /= trials;
    table.push_back(std::move(row));
  }
  return table;
}

GridBitmap kde_grid_filtration(const PointCloud& points, const PlanarGrid& grid, double bandwidth) {
  if (points.rows() == 0) throw Error(ErrorCode::EmptyPointCloud, "KDE needs at least one sample");
  if (points.cols() != 2) throw Error(ErrorCode::InvalidArgument, "KDE grid filtration needs planar points");
  if (!(bandwidth > 0)) throw Error(ErrorCode::BadBandwidth, "bandwidth must be positive");
  if (grid.nx < 1 || grid.ny < 1) throw Error(ErrorCode::InvalidArgument, "grid needs at least one cell per axis");

  const double norm = 1.0 / (2.0 * std::numbers::pi * bandwidth * bandwidth * static_cast<double>(points.rows()));
  const double inv_two_h2 = 1.0 / (2.0 * bandwidth * bandwidth);
  GridBitmap out{{grid.nx, grid.ny}, Eigen::VectorXd(grid.nx * grid.ny)};
  for (Index j = 0; j < grid.ny; ++j) {
    const double y = grid.y_center(j);
    for (Index i = 0; i < grid.nx; ++i) {
      const double x = grid.x_center(i);
      double density = 0;
      for (Eigen::Index s = 0; s < points.rows(); ++s) {
        const double dx = x - points(s, 0), dy = y - points(s, 1);
        density += std::exp(-(dx * dx + dy * dy) * inv_two_h2);
      }
      out.values(i + j * grid.nx) = -density * norm;
    }
  }
  return out;
}

GridBitmap circle_distance_bitmap(int half_resolution) {
  if (half_resolution < 1) throw Error(ErrorCode::InvalidArgument, "resolution must be >= 1");
  const Index side = 2 * half_resolution + 1;
  const double extent = 2.0;
  GridBitmap out{{side, side}, Eigen::VectorXd(side * side)};
  for (Index i = 0; i < side; ++i) {
    const double x = static_cast<double>(i) / static_cast<double>(side) * 2 * extent - extent;
    for (Index j = 0; j < side; ++j) {
      const double y = static_cast<double>(j) / static_cast<double>(side) * 2 * extent - extent;
      out.values(j + i * side) = std::abs(std::sqrt(x * x + y * y) - 1.0);
    }
  }
  return out;
}

}  // namespace tda
