#include "tda/graph.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <string>

#include "tda/error.hpp"

namespace tda {

UnionFind::UnionFind(std::size_t n) : parent_(n), size_(n, 1), components_(n) {
  std::iota(parent_.begin(), parent_.end(), std::size_t{0});
}

std::size_t UnionFind::find(std::size_t x) {
  while (parent_[x] != x) {
    parent_[x] = parent_[parent_[x]];
    x = parent_[x];
  }
  return x;
}

bool UnionFind::unite(std::size_t a, std::size_t b) {
  a = find(a);
  b = find(b);
  if (a == b) return false;
  if (size_[a] < size_[b]) std::swap(a, b);
  parent_[b] = a;
  size_[a] += size_[b];
  --components_;
  return true;
}

namespace {

struct IndexedGraph {
  std::vector<std::int64_t> labels;  // sorted, unique
  std::vector<std::pair<std::size_t, std::size_t>> edges;
};

IndexedGraph index_graph(const Graph& graph) {
  IndexedGraph g;
  g.labels = graph.vertices;
  std::sort(g.labels.begin(), g.labels.end());
  g.labels.erase(std::unique(g.labels.begin(), g.labels.end()), g.labels.end());
  auto locate = [&](std::int64_t v) {
    auto it = std::lower_bound(g.labels.begin(), g.labels.end(), v);
    if (it == g.labels.end() || *it != v)
      throw Error(ErrorCode::DanglingEdge, "edge endpoint " + std::to_string(v) + " is not a vertex");
    return static_cast<std::size_t>(it - g.labels.begin());
  };
  for (auto [a, b] : graph.edges) g.edges.emplace_back(locate(a), locate(b));
  return g;
}

}  // namespace

std::vector<std::vector<std::int64_t>> connected_components(const Graph& graph) {
  const auto g = index_graph(graph);
  UnionFind uf(g.labels.size());
  for (auto [a, b] : g.edges) uf.unite(a, b);
  std::vector<std::vector<std::int64_t>> out;
  std::vector<std::size_t> slot(g.labels.size(), SIZE_MAX);
  for (std::size_t v = 0; v < g.labels.size(); ++v) {
    const auto root = uf.find(v);
    if (slot[root] == SIZE_MAX) {
      slot[root] = out.size();
      out.emplace_back();
    }
    out[slot[root]].push_back(g.labels[v]);
  }
  return out;
}

std::vector<std::vector<std::size_t>> cycle_basis(const Graph& graph) {
  const auto g = index_graph(graph);
  const std::size_t n = g.labels.size();
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> adjacency(n);  // (neighbor, edge)
  for (std::size_t e = 0; e < g.edges.size(); ++e) {
    auto [a, b] = g.edges[e];
    adjacency[a].emplace_back(b, e);
    adjacency[b].emplace_back(a, e);
  }

  std::vector<std::size_t> parent_edge(n, SIZE_MAX);
  std::vector<std::size_t> depth(n, SIZE_MAX);
  std::vector<bool> tree_edge(g.edges.size(), false);
  if (n > 0) {
    std::queue<std::size_t> frontier;
    depth[0] = 0;
    frontier.push(0);
    while (!frontier.empty()) {
      const auto v = frontier.front();
      frontier.pop();
      for (auto [w, e] : adjacency[v]) {
        if (depth[w] != SIZE_MAX) continue;
        depth[w] = depth[v] + 1;
        parent_edge[w] = e;
        tree_edge[e] = true;
        frontier.push(w);
      }
    }
  }
  if (std::any_of(depth.begin(), depth.end(), [](std::size_t d) { return d == SIZE_MAX; }))
    throw Error(ErrorCode::DisconnectedGraph, "cycle basis needs a connected graph");

  auto other_end = [&](std::size_t e, std::size_t v) {
    return g.edges[e].first == v ? g.edges[e].second : g.edges[e].first;
  };

  std::vector<std::vector<std::size_t>> basis;
  for (std::size_t e = 0; e < g.edges.size(); ++e) {
    if (tree_edge[e]) continue;
    std::vector<std::size_t> cycle{e};
    auto [a, b] = g.edges[e];
    // Walk both endpoints up to their common ancestor.
    while (a != b) {
      if (depth[a] < depth[b]) std::swap(a, b);
      cycle.push_back(parent_edge[a]);
      a = other_end(parent_edge[a], a);
    }
    std::sort(cycle.begin(), cycle.end());
    basis.push_back(std::move(cycle));
  }
  return basis;
}

}  // namespace tda
