#include <cmath>
#include <numbers>

#include "doctest.h"
#include "helpers.hpp"
#include "oracles.hpp"
#include "tda/heat_map.hpp"
#include "tda/landscape.hpp"
#include "tda/permutation_test.hpp"
#include "tda/random.hpp"

using namespace tda;
using tda::test::code_of;

namespace {

std::vector<Interval> random_intervals(Rng& rng, std::size_t max_points) {
  std::vector<Interval> out(1 + rng.below(max_points));
  for (auto& iv : out) {
    const double b = std::floor(rng.uniform(0, 12)) / 2;
    iv = {b, b + 0.5 * (1 + std::floor(rng.uniform(0, 8)))};
  }
  return out;
}

// Composite Simpson on [lo, hi] with n (even) steps.
template <typename F>
double simpson(F f, double lo, double hi, int n) {
  const double h = (hi - lo) / n;
  double s = f(lo) + f(hi);
  for (int i = 1; i < n; ++i) s += (i % 2 ? 4 : 2) * f(lo + i * h);
  return s * h / 3;
}

double normal_cdf(double z) { return 0.5 * std::erfc(-z / std::numbers::sqrt2); }

}  // namespace

TEST_CASE("triangle_function") {
  CHECK(triangle_function(1, 5, 3) == 2);
  CHECK(triangle_function(1, 5, 0) == 0);
  CHECK(triangle_function(0, 4, 3) == 1);
  CHECK(triangle_function(0, 4, 4) == 0);
  CHECK(code_of([] { triangle_function(2, 2, 1); }) == ErrorCode::BadInterval);
  CHECK(code_of([] { triangle_function(3, 2, 1); }) == ErrorCode::BadInterval);
}

TEST_CASE("build_landscape examples") {
  const std::vector<Interval> one{{1, 5}};
  const auto l = build_landscape(one);
  REQUIRE(l.level_count() == 1);
  CHECK(l.levels[0] == std::vector<CriticalPoint>{{1, 0}, {3, 2}, {5, 0}});
  CHECK(evaluate_landscape(l, 1, 2) == 1);
  CHECK(evaluate_landscape(l, 2, 3) == 0);
  CHECK(evaluate_landscape(l, 7, 3) == 0);
  CHECK(code_of([&] { evaluate_landscape(l, 0, 3); }) == ErrorCode::InvalidArgument);

  CHECK(build_landscape(std::vector<Interval>{}).level_count() == 0);

  const auto two = build_landscape(std::vector<Interval>{{0, 4}, {2, 6}});
  CHECK(evaluate_landscape(two, 1, 2) == 2);
  CHECK(evaluate_landscape(two, 2, 2) == 0);
  CHECK(evaluate_landscape(two, 1, 3) == 1);
  CHECK(evaluate_landscape(two, 2, 3) == 1);
  CHECK(evaluate_landscape(two, 1, 4) == 2);

  const std::vector<Interval> with_essential{{0, kInfinity}, {1, 3}};
  CHECK(build_landscape(with_essential).level_count() == 1);
  CHECK(evaluate_landscape(build_landscape(with_essential, 10.0), 1, 5) == 5);
}

TEST_CASE("landscapes against the pointwise oracle") {
  Rng rng(17);
  for (int trial = 0; trial < 60; ++trial) {
    const auto ivs = random_intervals(rng, 8);
    const auto l = build_landscape(ivs);
    double max_pers = 0, lo = kInfinity, hi = -kInfinity;
    for (const auto& iv : ivs) {
      max_pers = std::max(max_pers, iv.death - iv.birth);
      lo = std::min(lo, iv.birth);
      hi = std::max(hi, iv.death);
    }
    for (int s = 0; s < 1000; ++s) {
      const double x = rng.uniform(lo - 1, hi + 1);
      for (std::size_t k = 1; k <= ivs.size() + 1; ++k) {
        const double v = evaluate_landscape(l, k, x);
        CHECK(std::abs(v - oracle::kth_largest_tent(ivs, k, x)) <= 1e-12);
        CHECK(v >= evaluate_landscape(l, k + 1, x) - 1e-12);
        CHECK(v >= 0);
      }
    }
    // Peak and support of the first level.
    double peak = 0;
    for (const auto& c : l.levels[0]) peak = std::max(peak, c.value);
    CHECK(peak == max_pers / 2);
    CHECK(l.levels[0].front().x == lo);
    CHECK(l.levels[0].back().x == hi);
    // Slopes are -1, 0 or 1.
    for (const auto& level : l.levels)
      for (std::size_t i = 1; i < level.size(); ++i) {
        const double slope = (level[i].value - level[i - 1].value) / (level[i].x - level[i - 1].x);
        CHECK(std::abs(std::abs(slope) - 1) * std::abs(slope) <= 1e-12);
      }
  }
}

TEST_CASE("average_landscapes") {
  const auto l = build_landscape(std::vector<Interval>{{0, 4}, {2, 6}});
  const std::vector<Landscape> single{l};
  const auto same = average_landscapes(single);
  for (double x = -1; x <= 7; x += 0.25)
    for (std::size_t k = 1; k <= 2; ++k) CHECK(evaluate_landscape(same, k, x) == evaluate_landscape(l, k, x));

  const std::vector<Landscape> with_zero{l, Landscape{}};
  const auto half = average_landscapes(with_zero);
  for (double x = -1; x <= 7; x += 0.25)
    for (std::size_t k = 1; k <= 2; ++k) CHECK(evaluate_landscape(half, k, x) == evaluate_landscape(l, k, x) / 2);

  const std::vector<Landscape> pair{build_landscape(std::vector<Interval>{{0, 2}}),
                                    build_landscape(std::vector<Interval>{{0, 4}})};
  CHECK(evaluate_landscape(average_landscapes(pair), 1, 1) == 1);
  CHECK(code_of([] { average_landscapes({}); }) == ErrorCode::EmptyInput);

  Rng rng(23);
  std::vector<Landscape> many;
  for (int i = 0; i < 5; ++i) many.push_back(build_landscape(random_intervals(rng, 5)));
  const auto avg = average_landscapes(many);
  for (int s = 0; s < 500; ++s) {
    const double x = rng.uniform(-1, 12);
    for (std::size_t k = 1; k <= 6; ++k) {
      double mean = 0;
      for (const auto& m : many) mean += evaluate_landscape(m, k, x) / 5;
      CHECK(std::abs(evaluate_landscape(avg, k, x) - mean) <= 1e-12);
    }
  }
}

TEST_CASE("landscape_distance") {
  const auto tri = build_landscape(std::vector<Interval>{{0, 2}});
  const Landscape zero;
  CHECK(landscape_distance(tri, tri, 1) == 0);
  CHECK(landscape_distance(tri, tri, kInfinity) == 0);
  CHECK(landscape_distance(tri, zero, 1) == doctest::Approx(1));
  CHECK(landscape_distance(tri, zero, kInfinity) == 1);
  CHECK(landscape_distance(tri, zero, 2) == doctest::Approx(std::sqrt(2.0 / 3)));
  CHECK(code_of([&] { landscape_distance(tri, zero, 0.9); }) == ErrorCode::BadExponent);

  Rng rng(29);
  for (int trial = 0; trial < 30; ++trial) {
    const auto a = random_intervals(rng, 4), b = random_intervals(rng, 4), c = random_intervals(rng, 4);
    const auto la = build_landscape(a), lb = build_landscape(b), lc = build_landscape(c);
    for (double p : {1.0, 2.0, 3.0, 1.5}) {
      // Breakpoints lie on a quarter grid; Simpson between them per level.
      double sum = 0;
      for (std::size_t k = 1; k <= 8; ++k)
        for (double x0 = -0.5; x0 < 12; x0 += 0.25)
          sum += simpson(
              [&](double x) { return std::pow(std::abs(oracle::kth_largest_tent(a, k, x) - oracle::kth_largest_tent(b, k, x)), p); },
              x0, x0 + 0.25, 64);
      CHECK(landscape_distance(la, lb, p) == doctest::Approx(std::pow(sum, 1 / p)).epsilon(1e-6));
      CHECK(landscape_distance(la, lb, p) == landscape_distance(lb, la, p));
      CHECK(landscape_distance(la, lc, p) <= landscape_distance(la, lb, p) + landscape_distance(lb, lc, p) + 1e-9);
    }
    double sup = 0;
    for (std::size_t k = 1; k <= 8; ++k)
      for (double x = -0.5; x <= 12; x += 0.25)
        sup = std::max(sup, std::abs(oracle::kth_largest_tent(a, k, x) - oracle::kth_largest_tent(b, k, x)));
    CHECK(landscape_distance(la, lb, kInfinity) == doctest::Approx(sup).epsilon(1e-12));
  }
}

TEST_CASE("sample_landscape") {
  const auto l = build_landscape(std::vector<Interval>{{0, 4}, {2, 6}});
  const auto s = sample_landscape(l, 0, 6, 7);
  CHECK(s.rows() == 2);
  CHECK(s.cols() == 7);
  CHECK(s(0, 2) == 2);
  CHECK(s(1, 3) == 1);
}

TEST_CASE("build_heat_map") {
  HeatMapOptions options;
  options.window = {0, 4, 0, 4};
  options.birth_resolution = options.death_resolution = 40;
  options.bandwidth = 0.5;

  SUBCASE("empty diagram") {
    const auto h = build_heat_map(std::vector<Interval>{}, options);
    CHECK(h.grid.rows() == 40);
    CHECK(h.grid.isZero(0));
  }
  SUBCASE("persistence-weighted mass") {
    options.mode = HeatMapMode::PersistenceWeighted;
    options.truncation = kInfinity;
    options.birth_resolution = options.death_resolution = 200;
    const auto h = build_heat_map(std::vector<Interval>{{1, 3}}, options);
    const double s = options.bandwidth;
    const double inside = (normal_cdf(3 / s) - normal_cdf(-1 / s)) * (normal_cdf(1 / s) - normal_cdf(-3 / s));
    CHECK(h.grid.sum() * h.cell_area() == doctest::Approx(2 * inside).epsilon(1e-3));
    CHECK(h.grid.minCoeff() >= 0);
  }
  SUBCASE("signed-symmetric antisymmetry") {
    options.mode = HeatMapMode::SignedSymmetric;
    const auto h = build_heat_map(std::vector<Interval>{{1, 3}}, options);
    CHECK((h.grid + h.grid.transpose()).cwiseAbs().maxCoeff() <= 1e-9);
    CHECK(h.grid.maxCoeff() > 0);
  }
  SUBCASE("linearity") {
    Rng rng(41);
    for (auto mode : {HeatMapMode::Constant, HeatMapMode::PersistenceWeighted, HeatMapMode::SignedSymmetric}) {
      options.mode = mode;
      const auto a = random_intervals(rng, 4), b = random_intervals(rng, 4);
      auto both = a;
      both.insert(both.end(), b.begin(), b.end());
      const Eigen::MatrixXd sum = build_heat_map(a, options).grid + build_heat_map(b, options).grid;
      CHECK((build_heat_map(both, options).grid - sum).cwiseAbs().maxCoeff() <= 1e-12);
    }
  }
  SUBCASE("bandwidth check") {
    options.bandwidth = 0;
    CHECK(code_of([&] { build_heat_map(std::vector<Interval>{}, options); }) == ErrorCode::BadBandwidth);
  }
}

TEST_CASE("permutation_test") {
  const auto wide = build_landscape(std::vector<Interval>{{0, 10}});
  const auto narrow = build_landscape(std::vector<Interval>{{0, 0.1}});
  const std::vector<Landscape> a(5, wide), b(5, narrow);

  const auto r = permutation_test(a, b, 1000, 7);
  CHECK(r.p_value < 0.05);
  CHECK(r.shuffles == 1000);
  CHECK(r.observed_distance > 0);
  CHECK(permutation_test(a, b, 1000, 7).p_value == r.p_value);

  // Identical constant samples: every distance is zero, nothing exceeds.
  const auto same = permutation_test(a, a, 50, 1);
  CHECK(same.observed_distance == 0);
  CHECK(same.p_value == 0);

  // Equal but varied samples: any split with nonzero distance exceeds D = 0.
  const std::vector<Landscape> mixed{wide, narrow, wide, narrow};
  const auto m = permutation_test(mixed, mixed, 200, 3);
  CHECK(m.observed_distance == 0);
  CHECK(m.p_value > 0.5);

  CHECK(code_of([&] { permutation_test(a, std::span(b).first(4), 10, 1); }) == ErrorCode::UnequalSampleSizes);
  CHECK(code_of([&] { permutation_test({}, {}, 10, 1); }) == ErrorCode::EmptyInput);
  CHECK(code_of([&] { permutation_test(a, b, 0, 1); }) == ErrorCode::InvalidArgument);
}
