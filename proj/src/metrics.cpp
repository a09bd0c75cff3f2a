#include "tda/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>

#include "tda/error.hpp"

namespace tda {

Real ground_distance(const Interval& a, const Interval& b) {
  return std::max(std::abs(a.birth - b.birth), std::abs(a.death - b.death));
}

Real diagonal_distance(const Interval& a) { return (a.death - a.birth) / 2; }

namespace {

struct Split {
  std::vector<Interval> finite;
  std::vector<Real> essential_births;
};

Split split(std::span<const Interval> points, const MetricOptions& options) {
  Split s;
  for (const auto& p : points) {
    if (!(p.birth < p.death)) continue;
    if (p.death != kInfinity) {
      s.finite.push_back(p);
    } else if (options.essential_cutoff) {
      if (p.birth < *options.essential_cutoff) s.finite.push_back({p.birth, *options.essential_cutoff});
    } else {
      s.essential_births.push_back(p.birth);
    }
  }
  std::sort(s.essential_births.begin(), s.essential_births.end());
  return s;
}

/// Sorted matching is optimal for |b - b'| on the line, for every q >= 1 and
/// for the maximum.
std::vector<Real> essential_costs(const Split& x, const Split& y) {
  if (x.essential_births.size() != y.essential_births.size())
    throw Error(ErrorCode::MixedEssential, "diagrams carry different numbers of essential points");
  std::vector<Real> costs;
  for (std::size_t i = 0; i < x.essential_births.size(); ++i)
    costs.push_back(std::abs(x.essential_births[i] - y.essential_births[i]));
  return costs;
}

/// Hopcroft-Karp on a bipartite graph with equal sides.
class Matcher {
 public:
  explicit Matcher(std::size_t n) : adjacency_(n), match_left_(n), match_right_(n), dist_(n) {}

  void add_edge(std::size_t l, std::size_t r) { adjacency_[l].push_back(r); }

  std::size_t max_matching() {
    const std::size_t n = adjacency_.size();
    std::fill(match_left_.begin(), match_left_.end(), kNone);
    std::fill(match_right_.begin(), match_right_.end(), kNone);
    std::size_t matched = 0;
    while (bfs()) {
      for (std::size_t l = 0; l < n; ++l)
        if (match_left_[l] == kNone && dfs(l)) ++matched;
    }
    return matched;
  }

 private:
  static constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

  bool bfs() {
    std::queue<std::size_t> q;
    bool found = false;
    for (std::size_t l = 0; l < adjacency_.size(); ++l) {
      if (match_left_[l] == kNone) {
        dist_[l] = 0;
        q.push(l);
      } else {
        dist_[l] = kNone;
      }
    }
    while (!q.empty()) {
      const auto l = q.front();
      q.pop();
      for (auto r : adjacency_[l]) {
        const auto next = match_right_[r];
        if (next == kNone) {
          found = true;
        } else if (dist_[next] == kNone) {
          dist_[next] = dist_[l] + 1;
          q.push(next);
        }
      }
    }
    return found;
  }

  bool dfs(std::size_t l) {
    for (auto r : adjacency_[l]) {
      const auto next = match_right_[r];
      if (next == kNone || (dist_[next] == dist_[l] + 1 && dfs(next))) {
        match_left_[l] = r;
        match_right_[r] = l;
        return true;
      }
    }
    dist_[l] = kNone;
    return false;
  }

  std::vector<std::vector<std::size_t>> adjacency_;
  std::vector<std::size_t> match_left_, match_right_, dist_;
};

// Left: x points then diagonal copies of y. Right: y points then diagonal copies of x.
bool perfect_within(const std::vector<Interval>& x, const std::vector<Interval>& y, Real radius) {
  const std::size_t n = x.size(), m = y.size();
  Matcher matcher(n + m);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < m; ++j)
      if (ground_distance(x[i], y[j]) <= radius) matcher.add_edge(i, j);
    if (diagonal_distance(x[i]) <= radius) matcher.add_edge(i, m + i);
  }
  for (std::size_t j = 0; j < m; ++j) {
    if (diagonal_distance(y[j]) <= radius) matcher.add_edge(n + j, j);
    for (std::size_t i = 0; i < n; ++i) matcher.add_edge(n + j, m + i);
  }
  return matcher.max_matching() == n + m;
}

Real finite_bottleneck(const std::vector<Interval>& x, const std::vector<Interval>& y) {
  std::vector<Real> candidates{0};
  for (const auto& a : x) {
    candidates.push_back(diagonal_distance(a));
    for (const auto& b : y) candidates.push_back(ground_distance(a, b));
  }
  for (const auto& b : y) candidates.push_back(diagonal_distance(b));
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

  // Matching everything to the diagonal is always feasible at the largest
  // diagonal cost, so the last candidate succeeds.
  std::size_t lo = 0, hi = candidates.size() - 1;
  while (lo < hi) {
    const std::size_t mid = lo + (hi - lo) / 2;
    if (perfect_within(x, y, candidates[mid]))
      hi = mid;
    else
      lo = mid + 1;
  }
  return candidates[lo];
}

}  // namespace

std::vector<Eigen::Index> solve_assignment(const Eigen::MatrixXd& cost) {
  // Shortest augmenting paths with row/column potentials (1-based internally).
  const Eigen::Index n = cost.rows();
  if (cost.cols() != n) throw Error(ErrorCode::InvalidArgument, "assignment needs a square cost matrix");
  const double inf = std::numeric_limits<double>::infinity();
  std::vector<double> u(n + 1, 0), v(n + 1, 0);
  std::vector<Eigen::Index> p(n + 1, 0), way(n + 1, 0);
  for (Eigen::Index i = 1; i <= n; ++i) {
    p[0] = i;
    Eigen::Index j0 = 0;
    std::vector<double> minv(n + 1, inf);
    std::vector<bool> used(n + 1, false);
    do {
      used[j0] = true;
      const Eigen::Index i0 = p[j0];
      double delta = inf;
      Eigen::Index j1 = 0;
      for (Eigen::Index j = 1; j <= n; ++j) {
        if (used[j]) continue;
        const double cur = cost(i0 - 1, j - 1) - u[i0] - v[j];
        if (cur < minv[j]) {
          minv[j] = cur;
          way[j] = j0;
        }
        if (minv[j] < delta) {
          delta = minv[j];
          j1 = j;
        }
      }
      for (Eigen::Index j = 0; j <= n; ++j) {
        if (used[j]) {
          u[p[j]] += delta;
          v[j] -= delta;
        } else {
          minv[j] -= delta;
        }
      }
      j0 = j1;
    } while (p[j0] != 0);
    do {
      const Eigen::Index j1 = way[j0];
      p[j0] = p[j1];
      j0 = j1;
    } while (j0 != 0);
  }
  std::vector<Eigen::Index> row_to_col(n);
  for (Eigen::Index j = 1; j <= n; ++j) row_to_col[p[j] - 1] = j - 1;
  return row_to_col;
}

Real bottleneck_distance(std::span<const Interval> x, std::span<const Interval> y, const MetricOptions& options) {
  const auto sx = split(x, options), sy = split(y, options);
  Real result = finite_bottleneck(sx.finite, sy.finite);
  for (Real c : essential_costs(sx, sy)) result = std::max(result, c);
  return result;
}

Real wasserstein_distance(std::span<const Interval> x, std::span<const Interval> y, Real q,
                          const MetricOptions& options) {
  if (!(q >= 1) || std::isinf(q)) throw Error(ErrorCode::BadExponent, "q must be a finite value >= 1");
  const auto sx = split(x, options), sy = split(y, options);
  const auto essential = essential_costs(sx, sy);
  const std::size_t n = sx.finite.size(), m = sy.finite.size();

  // Rows: x points then diagonal slots for y. Columns: y points then diagonal
  // slots for x. Any point may use any diagonal slot at its diagonal cost.
  Eigen::MatrixXd cost = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(n + m), static_cast<Eigen::Index>(n + m));
  for (std::size_t i = 0; i < n; ++i) {
    const double to_diagonal = std::pow(diagonal_distance(sx.finite[i]), q);
    for (std::size_t j = 0; j < m; ++j)
      cost(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
          std::pow(ground_distance(sx.finite[i], sy.finite[j]), q);
    for (std::size_t k = 0; k < n; ++k) cost(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(m + k)) = to_diagonal;
  }
  for (std::size_t j = 0; j < m; ++j) {
    const double to_diagonal = std::pow(diagonal_distance(sy.finite[j]), q);
    for (std::size_t k = 0; k < m; ++k) cost(static_cast<Eigen::Index>(n + k), static_cast<Eigen::Index>(j)) = to_diagonal;
  }

  double total = 0;
  if (n + m > 0) {
    const auto assignment = solve_assignment(cost);
    for (Eigen::Index r = 0; r < cost.rows(); ++r) total += cost(r, assignment[static_cast<std::size_t>(r)]);
  }
  for (Real c : essential) total += std::pow(c, q);
  return std::pow(total, 1.0 / q);
}

Real bottleneck_distance(const PersistenceDiagram& x, const PersistenceDiagram& y, int dimension,
                         const MetricOptions& options) {
  return bottleneck_distance(x.intervals(dimension), y.intervals(dimension), options);
}

Real wasserstein_distance(const PersistenceDiagram& x, const PersistenceDiagram& y, int dimension, Real q,
                          const MetricOptions& options) {
  return wasserstein_distance(x.intervals(dimension), y.intervals(dimension), q, options);
}

Eigen::MatrixXd distance_matrix(std::span<const PersistenceDiagram> diagrams, const MetricSpec& spec) {
  const auto n = static_cast<Eigen::Index>(diagrams.size());
  Eigen::MatrixXd out = Eigen::MatrixXd::Zero(n, n);
  std::vector<std::vector<Interval>> intervals;
  for (const auto& d : diagrams) intervals.push_back(d.intervals(spec.dimension));
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = i + 1; j < n; ++j) {
      const auto& a = intervals[static_cast<std::size_t>(i)];
      const auto& b = intervals[static_cast<std::size_t>(j)];
      const Real d = spec.metric == DiagramMetric::Bottleneck ? bottleneck_distance(a, b, spec.options)
                                                              : wasserstein_distance(a, b, spec.q, spec.options);
      out(i, j) = d;
      out(j, i) = d;
    }
  return out;
}

}  // namespace tda
