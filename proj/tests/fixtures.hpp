#pragma once

// Complexes from the worked examples used across unit and acceptance tests.

#include <map>

#include "tda/filtered_complex.hpp"

namespace tda::fixtures {

/// Vertices 1..4 at 1..4; edges 12@5, 13@6, 23@7; triangle 123@8; edge 34@9,
/// edge 24@10; triangle 234@11.
inline FilteredComplex vertex_filtration_example() {
  FilteredComplex k;
  for (std::int64_t v = 1; v <= 4; ++v) k.insert(Simplex{v}, static_cast<Real>(v));
  k.insert(Simplex{1, 2}, 5);
  k.insert(Simplex{1, 3}, 6);
  k.insert(Simplex{2, 3}, 7);
  k.insert(Simplex{1, 2, 3}, 8);
  k.insert(Simplex{3, 4}, 9);
  k.insert(Simplex{2, 4}, 10);
  k.insert(Simplex{2, 3, 4}, 11);
  return k;
}

/// Square with corners 1=(0,0), 2=(1,0), 3=(0,1), 4=(1,1) in doubled cube
/// coordinates.
inline Cube square_vertex(int label) {
  switch (label) {
    case 1: return Cube{0, 0};
    case 2: return Cube{2, 0};
    case 3: return Cube{0, 2};
    default: return Cube{2, 2};
  }
}
inline Cube square_edge_13() { return Cube{0, 1}; }
inline Cube square_edge_24() { return Cube{2, 1}; }
inline Cube square_edge_12() { return Cube{1, 0}; }
inline Cube square_edge_34() { return Cube{1, 2}; }
inline Cube square_face() { return Cube{1, 1}; }

/// Ordinal filtration 1..9 in the order [1],[2],[3],[4],[13],[24],[12],[34],[1234].
inline FilteredComplex square_example(bool with_face = true) {
  FilteredComplex k;
  for (int v = 1; v <= 4; ++v) k.insert(square_vertex(v), v);
  k.insert(square_edge_13(), 5);
  k.insert(square_edge_24(), 6);
  k.insert(square_edge_12(), 7);
  k.insert(square_edge_34(), 8);
  if (with_face) k.insert(square_face(), 9);
  return k;
}

/// The 18 triangles of the nine-vertex triangulation with their top values
/// 0..17 in listing order.
inline const std::vector<std::pair<Simplex, Real>>& triangulation_triangles() {
  static const std::vector<std::pair<Simplex, Real>> triangles{
      {{1, 4, 8}, 0},  {{1, 2, 8}, 1},  {{2, 6, 8}, 2},  {{2, 3, 6}, 3},  {{3, 4, 6}, 4},  {{1, 3, 4}, 5},
      {{4, 5, 9}, 6},  {{4, 8, 9}, 7},  {{7, 8, 9}, 8},  {{6, 7, 8}, 9},  {{5, 6, 7}, 10}, {{4, 5, 6}, 11},
      {{1, 2, 5}, 12}, {{2, 5, 9}, 13}, {{2, 3, 9}, 14}, {{3, 7, 9}, 15}, {{1, 3, 7}, 16}, {{1, 5, 7}, 17}};
  return triangles;
}

/// Inserts each triangle with closure; faces keep the minimum over cofaces.
inline FilteredComplex triangulation(const std::vector<Real>& top_values) {
  FilteredComplex k;
  const auto& tris = triangulation_triangles();
  for (std::size_t i = 0; i < tris.size(); ++i) k.insert(tris[i].first, top_values[i], Insertion::WithClosure);
  return k;
}

inline std::vector<Real> triangulation_values() {
  std::vector<Real> v;
  for (const auto& [s, value] : triangulation_triangles()) v.push_back(value);
  return v;
}

}  // namespace tda::fixtures
