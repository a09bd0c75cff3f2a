#include "tda/rips_persistence.hpp"

#include <algorithm>
#include <cstdint>
#include <optional>
#include <queue>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "tda/error.hpp"
#include "tda/geometry.hpp"
#include "tda/graph.hpp"

namespace tda {
namespace {

using SimplexId = std::uint64_t;

struct Entry {
  Real diameter;
  SimplexId id;
};

// Filtration order within one dimension: diameter ascending, larger id first.
bool precedes(const Entry& a, const Entry& b) {
  if (a.diameter != b.diameter) return a.diameter < b.diameter;
  return a.id > b.id;
}

struct LaterFirst {
  bool operator()(const Entry& a, const Entry& b) const { return precedes(a, b); }
};
struct EarlierFirst {
  bool operator()(const Entry& a, const Entry& b) const { return precedes(b, a); }
};

class Binomials {
 public:
  Binomials(std::int64_t n, int k) : k_max_(k + 1), table_(static_cast<std::size_t>((n + 1) * (k + 2)), 0) {
    for (std::int64_t i = 0; i <= n; ++i) {
      at(i, 0) = 1;
      for (int j = 1; j <= std::min<std::int64_t>(i, k + 1); ++j)
        at(i, j) = at(i - 1, j - 1) + (j <= i - 1 ? at(i - 1, j) : 0);
    }
  }
  SimplexId operator()(std::int64_t n, int k) const {
    if (k > k_max_) throw Error(ErrorCode::InvalidArgument, "binomial table too small");
    if (k < 0 || n < 0 || k > n) return 0;
    return table_[static_cast<std::size_t>(n * (k_max_ + 1) + k)];
  }

 private:
  SimplexId& at(std::int64_t n, int k) { return table_[static_cast<std::size_t>(n * (k_max_ + 1) + k)]; }
  int k_max_;
  std::vector<SimplexId> table_;
};

class RipsFiltration {
 public:
  RipsFiltration(const DistanceMatrix& d, Real threshold, int max_dimension)
      : d_(d), n_(d.rows()), threshold_(threshold), binomial_(d.rows(), max_dimension + 1) {}

  std::int64_t vertex_count() const { return n_; }
  Real threshold() const { return threshold_; }
  Real distance(std::int64_t a, std::int64_t b) const { return d_(a, b); }

  /// Vertices in descending order.
  std::vector<std::int64_t> vertices(SimplexId id, int dim) const {
    std::vector<std::int64_t> out;
    out.reserve(static_cast<std::size_t>(dim) + 1);
    std::int64_t v = n_ - 1;
    for (int k = dim + 1; k > 0; --k) {
      while (binomial_(v, k) > id) --v;
      out.push_back(v);
      id -= binomial_(v, k);
    }
    return out;
  }

  SimplexId index(const std::vector<std::int64_t>& descending) const {
    SimplexId id = 0;
    const auto k = static_cast<int>(descending.size());
    for (int i = 0; i < k; ++i) id += binomial_(descending[static_cast<std::size_t>(i)], k - i);
    return id;
  }

  Real diameter(const std::vector<std::int64_t>& v) const {
    Real best = 0;
    for (std::size_t i = 0; i < v.size(); ++i)
      for (std::size_t j = i + 1; j < v.size(); ++j) best = std::max(best, d_(v[i], v[j]));
    return best;
  }

  /// Calls visit(cofacet) for every cofacet within the threshold, in
  /// decreasing id order. visit returns false to stop early.
  template <typename Visit>
  void for_each_cofacet(const Entry& simplex, int dim, Visit&& visit) const {
    const auto verts = vertices(simplex.id, dim);
    SimplexId below = simplex.id;
    SimplexId above = 0;
    std::int64_t j = n_ - 1;
    int k = dim + 1;
    std::size_t next_vertex = 0;
    while (j >= k) {
      if (next_vertex < verts.size() && verts[next_vertex] == j) {
        below -= binomial_(j, k);
        above += binomial_(j, k + 1);
        ++next_vertex;
        --j;
        --k;
        continue;
      }
      Real diam = simplex.diameter;
      for (std::int64_t u : verts) diam = std::max(diam, d_(j, u));
      const SimplexId id = above + binomial_(j, k + 1) + below;
      --j;
      if (diam > threshold_) continue;
      if (!visit(Entry{diam, id})) return;
    }
  }

 private:
  const DistanceMatrix& d_;
  std::int64_t n_;
  Real threshold_;
  Binomials binomial_;
};

std::optional<Entry> heap_pivot(std::priority_queue<Entry, std::vector<Entry>, EarlierFirst>& heap) {
  while (!heap.empty()) {
    const Entry top = heap.top();
    heap.pop();
    if (!heap.empty() && heap.top().id == top.id) {
      heap.pop();
      continue;
    }
    heap.push(top);
    return top;
  }
  return std::nullopt;
}

void add_point(PersistenceDiagram& out, int dim, Real birth, Real death) {
  if (death > birth) out.points.push_back({dim, birth, death, {}});
}

}  // namespace

PersistenceDiagram rips_persistence(const DistanceMatrix& distances, Real max_edge_length, int max_dimension) {
  check_distance_matrix(distances);
  if (!(max_edge_length >= 0)) throw Error(ErrorCode::InvalidArgument, "max edge length must be >= 0");
  if (max_dimension < 1) throw Error(ErrorCode::InvalidArgument, "max dimension must be >= 1");

  PersistenceDiagram diagram;
  const RipsFiltration rips(distances, max_edge_length, max_dimension);
  const std::int64_t n = rips.vertex_count();
  if (n == 0) return diagram;

  // Edges within the threshold, in filtration order.
  std::vector<Entry> edges;
  for (std::int64_t b = 1; b < n; ++b)
    for (std::int64_t a = 0; a < b; ++a)
      if (distances(a, b) <= max_edge_length)
        edges.push_back({distances(a, b), static_cast<SimplexId>(b * (b - 1) / 2 + a)});
  std::sort(edges.begin(), edges.end(), precedes);

  // Dimension 0: every vertex is born at 0, merges kill the younger class.
  std::vector<Entry> columns;
  {
    UnionFind components(static_cast<std::size_t>(n));
    for (const auto& e : edges) {
      const auto v = rips.vertices(e.id, 1);
      if (components.unite(static_cast<std::size_t>(v[0]), static_cast<std::size_t>(v[1]))) {
        add_point(diagram, 0, 0, e.diameter);
      } else {
        columns.push_back(e);
      }
    }
    for (std::size_t c = 0; c < components.components(); ++c) diagram.points.push_back({0, 0, kInfinity, {}});
  }

  std::vector<Entry> simplices = edges;  // all simplices of the current dimension
  for (int dim = 1; dim < max_dimension; ++dim) {
    // Columns in reverse filtration order; cleared ones are already paired.
    std::reverse(columns.begin(), columns.end());

    std::unordered_map<SimplexId, std::size_t> pivot_owner;
    std::vector<std::vector<Entry>> reduction(columns.size());
    std::unordered_set<SimplexId> next_cleared;

    for (std::size_t c = 0; c < columns.size(); ++c) {
      const Entry sigma = columns[c];

      // The first cofacet of equal diameter is the unreduced pivot; if no
      // earlier column owns it, the column is already reduced.
      std::optional<Entry> emergent;
      rips.for_each_cofacet(sigma, dim, [&](const Entry& cofacet) {
        if (cofacet.diameter != sigma.diameter) return true;
        if (!pivot_owner.contains(cofacet.id)) emergent = cofacet;
        return false;
      });
      if (emergent) {
        pivot_owner.emplace(emergent->id, c);
        reduction[c] = {sigma};
        next_cleared.insert(emergent->id);
        continue;
      }

      std::priority_queue<Entry, std::vector<Entry>, EarlierFirst> working;
      std::vector<Entry> combination{sigma};
      rips.for_each_cofacet(sigma, dim, [&](const Entry& cofacet) {
        working.push(cofacet);
        return true;
      });
      while (true) {
        const auto pivot = heap_pivot(working);
        if (!pivot) {
          add_point(diagram, dim, sigma.diameter, kInfinity);
          break;
        }
        auto owner = pivot_owner.find(pivot->id);
        if (owner == pivot_owner.end()) {
          add_point(diagram, dim, sigma.diameter, pivot->diameter);
          pivot_owner.emplace(pivot->id, c);
          // Keep only summands with odd multiplicity.
          std::sort(combination.begin(), combination.end(),
                    [](const Entry& a, const Entry& b) { return a.id < b.id; });
          std::vector<Entry> reduced;
          for (std::size_t i = 0; i < combination.size();) {
            std::size_t j = i;
            while (j < combination.size() && combination[j].id == combination[i].id) ++j;
            if ((j - i) % 2 == 1) reduced.push_back(combination[i]);
            i = j;
          }
          reduction[c] = std::move(reduced);
          next_cleared.insert(pivot->id);
          break;
        }
        for (const Entry& summand : reduction[owner->second]) {
          combination.push_back(summand);
          rips.for_each_cofacet(summand, dim, [&](const Entry& cofacet) {
            working.push(cofacet);
            return true;
          });
        }
      }
    }

    if (dim + 1 >= max_dimension) break;

    // Enumerate (dim+1)-simplices by appending a vertex above the current top.
    std::vector<Entry> next;
    for (const Entry& s : simplices) {
      const auto verts = rips.vertices(s.id, dim);
      rips.for_each_cofacet(s, dim, [&](const Entry& cofacet) {
        const auto cv = rips.vertices(cofacet.id, dim + 1);
        if (cv.front() > verts.front()) next.push_back(cofacet);
        return true;
      });
    }
    std::sort(next.begin(), next.end(), precedes);
    simplices = std::move(next);
    columns.clear();
    for (const Entry& s : simplices)
      if (!next_cleared.contains(s.id)) columns.push_back(s);
  }

  diagram.sort();
  return diagram;
}

PersistenceDiagram rips_persistence(const PointCloud& points, Real max_edge_length, int max_dimension) {
  return rips_persistence(euclidean_distances(points), max_edge_length, max_dimension);
}

}  // namespace tda
