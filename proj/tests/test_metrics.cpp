#include <cmath>

#include "doctest.h"
#include "fixtures.hpp"
#include "helpers.hpp"
#include "oracles.hpp"
#include "tda/metrics.hpp"
#include "tda/random.hpp"

using namespace tda;
using tda::test::code_of;

namespace {

std::vector<Interval> random_diagram(Rng& rng, std::size_t max_points) {
  std::vector<Interval> out(rng.below(max_points + 1));
  for (auto& iv : out) {
    const double b = std::floor(rng.uniform(0, 8)) / 2;  // ties on purpose
    iv = {b, b + 0.25 + rng.uniform(0, 3)};
  }
  return out;
}

PersistenceDiagram as_diagram(const std::vector<Interval>& ivs, int dim = 0) {
  PersistenceDiagram d;
  for (const auto& iv : ivs) d.points.push_back({dim, iv.birth, iv.death, {}});
  return d;
}

}  // namespace

TEST_CASE("bottleneck examples") {
  const std::vector<Interval> x{{1, 2}, {2, 4}, {3, 4}};
  const std::vector<Interval> y{{1, 2}, {2, 4}};
  CHECK(bottleneck_distance(x, x) == 0);
  CHECK(bottleneck_distance(std::vector<Interval>{{0, 2}}, {}) == 1);
  CHECK(bottleneck_distance(x, y) == doctest::Approx(0.5));
  CHECK(oracle::brute_bottleneck(x, y) == doctest::Approx(0.5));
  CHECK(bottleneck_distance(std::vector<Interval>{}, std::vector<Interval>{}) == 0);
}

TEST_CASE("wasserstein examples") {
  const std::vector<Interval> one{{0, 2}};
  CHECK(wasserstein_distance(one, one, 1) == 0);
  CHECK(wasserstein_distance(one, {}, 1) == doctest::Approx(1));
  CHECK(wasserstein_distance(one, {}, 2) == doctest::Approx(1));
  const std::vector<Interval> x{{0, 2}, {0, 4}};
  const std::vector<Interval> y{{0, 4}};
  CHECK(wasserstein_distance(x, y, 1) == doctest::Approx(1));
  CHECK(oracle::brute_wasserstein(x, y, 1) == doctest::Approx(1));
  CHECK(code_of([&] { wasserstein_distance(x, y, 0.5); }) == ErrorCode::BadExponent);
  CHECK(code_of([&] { wasserstein_distance(x, y, kInfinity); }) == ErrorCode::BadExponent);
}

TEST_CASE("essential points") {
  PersistenceDiagram a, b;
  a.points = {{0, 0, kInfinity, {}}, {0, 1, 3, {}}};
  b.points = {{0, 0.5, kInfinity, {}}, {0, 1, 3, {}}};
  CHECK(bottleneck_distance(a, b, 0) == doctest::Approx(0.5));
  CHECK(wasserstein_distance(a, b, 0, 1) == doctest::Approx(0.5));

  PersistenceDiagram c;
  c.points = {{0, 1, 3, {}}};
  CHECK(code_of([&] { bottleneck_distance(a, c, 0); }) == ErrorCode::MixedEssential);
  CHECK(code_of([&] { wasserstein_distance(a, c, 0, 2); }) == ErrorCode::MixedEssential);
  // With a cutoff the essential point becomes (0, 10), at diagonal cost 5.
  CHECK(bottleneck_distance(a, c, 0, {.essential_cutoff = 10.0}) == doctest::Approx(5));
}

TEST_CASE("solve_assignment") {
  Eigen::MatrixXd cost(3, 3);
  cost << 4, 1, 3, 2, 0, 5, 3, 2, 2;
  const auto a = solve_assignment(cost);
  double total = 0;
  for (Eigen::Index i = 0; i < 3; ++i) total += cost(i, a[static_cast<std::size_t>(i)]);
  CHECK(total == 5);
}

TEST_CASE("distance_matrix") {
  const std::vector<PersistenceDiagram> one{as_diagram({{0, 2}})};
  CHECK(distance_matrix(one, {}) == Eigen::MatrixXd::Zero(1, 1));

  const std::vector<PersistenceDiagram> three{as_diagram({{0, 2}}), as_diagram({{0, 2}}), as_diagram({})};
  Eigen::MatrixXd expected(3, 3);
  expected << 0, 0, 1, 0, 0, 1, 1, 1, 0;
  CHECK(distance_matrix(three, {}) == expected);

  Rng rng(3);
  std::vector<PersistenceDiagram> twice;
  for (int i = 0; i < 3; ++i) twice.push_back(as_diagram(random_diagram(rng, 4)));
  for (int i = 0; i < 3; ++i) twice.push_back(twice[static_cast<std::size_t>(i)]);
  const auto m = distance_matrix(twice, {.metric = DiagramMetric::Wasserstein, .q = 2, .dimension = 0, .options = {}});
  CHECK(m == m.transpose());
  CHECK(m.topLeftCorner(3, 3) == m.topRightCorner(3, 3));
  for (int i = 0; i < 3; ++i) CHECK(m(i, i + 3) == 0);
}

TEST_CASE("matching against exhaustive enumeration") {
  Rng rng(11);
  for (int trial = 0; trial < 150; ++trial) {
    const auto x = random_diagram(rng, 6);
    const auto y = random_diagram(rng, 6);
    CHECK(std::abs(bottleneck_distance(x, y) - oracle::brute_bottleneck(x, y)) <= 1e-9);
    for (double q : {1.0, 2.0, 3.5}) {
      const double fast = wasserstein_distance(x, y, q);
      CHECK(std::abs(fast - oracle::brute_wasserstein(x, y, q)) <= 1e-9);
      CHECK(bottleneck_distance(x, y) <= fast + 1e-12);
    }
  }
}

TEST_CASE("metric axioms") {
  Rng rng(12);
  for (int trial = 0; trial < 100; ++trial) {
    const auto x = random_diagram(rng, 8), y = random_diagram(rng, 8), z = random_diagram(rng, 8);
    CHECK(bottleneck_distance(x, y) == bottleneck_distance(y, x));
    CHECK(bottleneck_distance(x, z) <= bottleneck_distance(x, y) + bottleneck_distance(y, z) + 1e-9);
    for (double q : {1.0, 2.0}) {
      CHECK(wasserstein_distance(x, y, q) == doctest::Approx(wasserstein_distance(y, x, q)).epsilon(1e-12));
      CHECK(wasserstein_distance(x, z, q) <= wasserstein_distance(x, y, q) + wasserstein_distance(y, z, q) + 1e-9);
    }
  }
}

TEST_CASE("stability under perturbation of the triangulation") {
  const auto base_values = fixtures::triangulation_values();
  const auto base = fixtures::triangulation(base_values);
  const auto base_dgm = compute_persistence(base);
  Rng rng(2718);
  for (int trial = 0; trial < 100; ++trial) {
    auto values = base_values;
    for (auto& v : values) v += rng.uniform(-0.1, 0.1);
    const auto moved = fixtures::triangulation(values);
    double sup = 0;
    for (const auto& c : base.cells()) sup = std::max(sup, std::abs(c.filtration - moved[*moved.find(c.key)].filtration));
    const auto dgm = compute_persistence(moved);
    for (int dim = 0; dim <= 2; ++dim) CHECK(bottleneck_distance(base_dgm, dgm, dim) <= sup + 1e-9);
  }
}
