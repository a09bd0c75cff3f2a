#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <ostream>
#include <variant>
#include <vector>

namespace tda {

/// An abstract simplex: strictly increasing, non-negative vertex ids.
class Simplex {
 public:
  Simplex() = default;
  /// Sorts and validates; throws InvalidArgument on duplicates, negatives or
  /// an empty vertex list.
  explicit Simplex(std::vector<std::int64_t> vertices);
  Simplex(std::initializer_list<std::int64_t> vertices)
      : Simplex(std::vector<std::int64_t>(vertices)) {}

  const std::vector<std::int64_t>& vertices() const noexcept { return vertices_; }
  int dimension() const noexcept { return static_cast<int>(vertices_.size()) - 1; }

  friend auto operator<=>(const Simplex&, const Simplex&) = default;
  friend bool operator==(const Simplex&, const Simplex&) = default;

 private:
  std::vector<std::int64_t> vertices_;
};

/// Elementary cube in doubled coordinates: 2n is the degenerate interval
/// [n,n], 2n+1 is [n,n+1].
class Cube {
 public:
  Cube() = default;
  explicit Cube(std::vector<std::int64_t> coords) : coords_(std::move(coords)) {}
  Cube(std::initializer_list<std::int64_t> coords) : coords_(coords) {}

  const std::vector<std::int64_t>& coords() const noexcept { return coords_; }
  int ambient_dimension() const noexcept { return static_cast<int>(coords_.size()); }
  int dimension() const noexcept;

  friend auto operator<=>(const Cube&, const Cube&) = default;
  friend bool operator==(const Cube&, const Cube&) = default;

 private:
  std::vector<std::int64_t> coords_;
};

/// Faces obtained by deleting one vertex at a time, in deletion order
/// (vertex 0 first).
std::vector<Simplex> boundary(const Simplex& s);

/// For every non-degenerate coordinate 2n+1, the lower face 2n and the upper
/// face 2n+2, in coordinate order.
std::vector<Cube> boundary(const Cube& c);

/// Canonical key of a cell. Simplices order before cubes; within a kind the
/// order is lexicographic.
using CellKey = std::variant<Simplex, Cube>;

int dimension(const CellKey& key);
std::vector<CellKey> boundary(const CellKey& key);

std::ostream& operator<<(std::ostream& os, const Simplex& s);
std::ostream& operator<<(std::ostream& os, const Cube& c);
std::ostream& operator<<(std::ostream& os, const CellKey& key);

}  // namespace tda
