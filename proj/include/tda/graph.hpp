#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace tda {

/// Disjoint-set forest with path halving and union by size.
class UnionFind {
 public:
  explicit UnionFind(std::size_t n);

  std::size_t find(std::size_t x);
  /// Returns false when already joined.
  bool unite(std::size_t a, std::size_t b);
  std::size_t components() const noexcept { return components_; }

 private:
  std::vector<std::size_t> parent_;
  std::vector<std::size_t> size_;
  std::size_t components_;
};

struct Graph {
  std::vector<std::int64_t> vertices;
  std::vector<std::pair<std::int64_t, std::int64_t>> edges;
};

/// Path-connectivity classes; each class ascending, classes ordered by their
/// smallest vertex. Throws DanglingEdge for edges with unknown endpoints.
std::vector<std::vector<std::int64_t>> connected_components(const Graph& graph);

/// Fundamental cycles of a BFS spanning tree: one per cotree edge, as indices
/// into graph.edges (ascending). Throws DisconnectedGraph.
std::vector<std::vector<std::size_t>> cycle_basis(const Graph& graph);

}  // namespace tda
