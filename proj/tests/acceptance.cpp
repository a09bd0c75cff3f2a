// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <set>
#include <sstream>
#include <string>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "random_complexes.hpp"
#include "tda/tda.hpp"

using namespace tda;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
};

int failures = 0;

void run(int id, const char* name, double budget_seconds, const std::function<Outcome()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Outcome r;
  try {
    r = body();
  } catch (const std::exception& e) {
    r = {false, std::string("exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (secs > budget_seconds) {
    r.ok = false;
    r.detail += " over budget";
  }
  if (!r.ok) ++failures;
  std::printf("[%s] %2d %s (%.2f s / %.0f s)%s%s\n", r.ok ? "PASS" : "FAIL", id, name, secs, budget_seconds,
              r.detail.empty() ? "" : ": ", r.detail.c_str());
  std::fflush(stdout);
}

using Triple = std::tuple<int, Real, Real>;

std::vector<Triple> triples(const PersistenceDiagram& d) {
  std::vector<Triple> out;
  for (const auto& p : d.points) out.emplace_back(p.dimension, p.birth, p.death);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Interval> random_intervals(Rng& rng, std::size_t max_points, std::size_t min_points = 0) {
  std::vector<Interval> out(min_points + rng.below(max_points - min_points + 1));
  for (auto& iv : out) {
    const double b = rng.uniform(0, 5);
    iv = {b, b + rng.uniform(0.05, 3)};
  }
  return out;
}

Outcome worked_example() {
  const auto d = compute_persistence(fixtures::vertex_filtration_example());
  const std::vector<Triple> expected{{0, 1, kInfinity}, {0, 2, 5}, {0, 3, 6}, {0, 4, 9}, {1, 7, 8}, {1, 10, 11}};
  return {triples(d) == expected, ""};
}

Outcome square_example() {
  const auto d = compute_persistence(fixtures::square_example(true));
  const std::vector<Triple> expected{{0, 1, kInfinity}, {0, 2, 7}, {0, 3, 5}, {0, 4, 6}, {1, 8, 9}};
  if (triples(d) != expected) return {false, "diagram with face differs"};

  const auto open = sort_cells(fixtures::square_example(false)).complex;
  if (betti_numbers(open) != std::vector<Index>{1, 1}) return {false, "Betti numbers without face"};
  const auto dgm = extract_diagram(reduce(build_boundary_matrix(open), {.track_cycles = true}));
  std::set<CellKey> edges;
  for (const auto& p : dgm.points)
    if (p.dimension == 1)
      for (Index i : p.representative) edges.insert(open[i].key);
  const std::set<CellKey> want{fixtures::square_edge_12(), fixtures::square_edge_13(), fixtures::square_edge_24(),
                               fixtures::square_edge_34()};
  return {edges == want, edges == want ? "" : "representative differs"};
}

Outcome stability() {
  const auto values = fixtures::triangulation_values();
  const auto base = fixtures::triangulation(values);
  const auto base_dgm = compute_persistence(base);
  Rng rng(31415);
  double worst = 0;
  for (int trial = 0; trial < 100; ++trial) {
    auto v = values;
    for (auto& x : v) x += rng.uniform(0, 0.1);
    const auto dgm = compute_persistence(fixtures::triangulation(v));
    for (int dim = 0; dim <= 2; ++dim) worst = std::max(worst, bottleneck_distance(base_dgm, dgm, dim));
  }
  std::ostringstream os;
  os << "max bottleneck " << worst;
  return {worst <= 0.1 + 1e-9, os.str()};
}

Outcome metric_oracle() {
  Rng rng(2718);
  double worst = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const auto x = random_intervals(rng, 6), y = random_intervals(rng, 6);
    worst = std::max(worst, std::abs(bottleneck_distance(x, y) - oracle::brute_bottleneck(x, y)));
    for (double q : {1.0, 2.0})
      worst = std::max(worst, std::abs(wasserstein_distance(x, y, q) - oracle::brute_wasserstein(x, y, q)));
  }
  std::ostringstream os;
  os << "max deviation " << worst;
  return {worst <= 1e-9, os.str()};
}

Outcome homology_oracle() {
  Rng rng(1618);
  int simplicial = 0, cubical = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const bool cub = trial % 2 == 1;
    const auto k = cub ? test::random_cubical_complex(rng, 40) : test::random_simplicial_complex(rng, 40);
    (cub ? cubical : simplicial)++;
    const auto sorted = sort_cells(k).complex;
    const auto r = reduce(build_boundary_matrix(sorted));
    std::set<Real> values{kInfinity};
    for (const auto& c : sorted.cells()) values.insert(c.filtration);
    for (Real t : values)
      if (betti_at(r, t) != oracle::betti_by_rank(sorted, t)) return {false, "mismatch in trial " + std::to_string(trial)};
  }
  return {true, std::to_string(simplicial) + " simplicial, " + std::to_string(cubical) + " cubical"};
}

Outcome landscape_oracle() {
  Rng rng(4242);
  double worst = 0;
  for (int trial = 0; trial < 50; ++trial) {
    const auto ivs = random_intervals(rng, 10, 1);
    const auto l = build_landscape(ivs);
    for (int s = 0; s < 1000; ++s) {
      const double x = rng.uniform(-1, 9);
      for (std::size_t k = 1; k <= ivs.size(); ++k) {
        const double v = evaluate_landscape(l, k, x);
        worst = std::max(worst, std::abs(v - oracle::kth_largest_tent(ivs, k, x)));
        if (v < evaluate_landscape(l, k + 1, x) - 1e-12) return {false, "level ordering broken"};
      }
    }
    for (const auto& level : l.levels)
      for (std::size_t i = 1; i < level.size(); ++i)
        if (std::abs(level[i].value - level[i - 1].value) > level[i].x - level[i - 1].x + 1e-12)
          return {false, "level is not 1-Lipschitz"};
  }
  std::ostringstream os;
  os << "max deviation " << worst;
  return {worst <= 1e-12, os.str()};
}

// Persistence of the longest H1 interval over the runner-up; inf when alone.
std::pair<double, std::size_t> dominance(const PersistenceDiagram& d) {
  std::vector<double> pers;
  for (const auto& p : d.points)
    if (p.dimension == 1) pers.push_back(p.persistence());
  std::sort(pers.rbegin(), pers.rend());
  if (pers.empty()) return {0, 0};
  return {pers.size() == 1 ? kInfinity : pers[0] / pers[1], pers.size()};
}

Outcome sliding_window() {
  Eigen::VectorXd values(1000);
  for (Index i = 0; i < 1000; ++i) values(i) = std::sin(10 * std::numbers::pi * static_cast<double>(i) / 999);
  const PointCloud clean = sliding_window_embed(values, 200);
  const auto [clean_ratio, clean_count] = dominance(rips_persistence(clean, 20, 2));

  PointCloud noisy = clean;
  Rng rng(7);
  for (Index i = 0; i < noisy.rows(); ++i)
    for (Index j = 0; j < noisy.cols(); ++j) noisy(i, j) += rng.uniform(0, 0.3);
  const auto [noisy_ratio, noisy_count] = dominance(rips_persistence(noisy, 20, 2));

  std::ostringstream os;
  os << "ratio " << clean_ratio << " over " << clean_count << " H1 intervals; noisy ratio " << noisy_ratio << " over "
     << noisy_count;
  return {clean_count >= 1 && clean_ratio >= 5 && noisy_ratio >= 3, os.str()};
}

Outcome circle_bitmap() {
  const auto h1 = compute_persistence(cubical_from_bitmap(circle_distance_bitmap(100))).intervals(1);
  for (const auto& iv : h1)
    if (iv.birth < 0.05 && iv.death - iv.birth > 0.9) {
      std::ostringstream os;
      os << "interval [" << iv.birth << ", " << iv.death << ")";
      return {true, os.str()};
    }
  return {false, "no interval born below 0.05 with persistence above 0.9"};
}

Outcome percolation() {
  const auto ends = percolation_sweep({50, 50}, {0, 1}, 5, 1);
  if (ends[0].mean_betti != std::vector<double>{0, 0} || ends[1].mean_betti != std::vector<double>{1, 0})
    return {false, "p = 0 or p = 1 row"};
  const int trials = 20;
  const std::uint64_t seed = 99;
  double sum = 0;
  for (int t = 0; t < trials; ++t) {
    const auto bitmap = random_cubical({50, 50}, 0.05, percolation_trial_seed(seed, 0, trials, t));
    const auto betti = betti_numbers(cubical_from_bitmap(bitmap));
    const auto b0 = betti.empty() ? 0 : betti[0];
    if (static_cast<std::size_t>(b0) != oracle::presence_components(bitmap))
      return {false, "trial " + std::to_string(t) + " disagrees with union-find"};
    sum += static_cast<double>(b0);
  }
  const auto rows = percolation_sweep({50, 50}, {0.05}, trials, seed);
  std::ostringstream os;
  os << "mean Betti0 " << rows[0].mean_betti[0];
  return {rows[0].mean_betti[0] == sum / trials, os.str()};
}

Outcome permutation() {
  const auto wide = build_landscape(std::vector<Interval>{{0, 10}});
  const auto narrow = build_landscape(std::vector<Interval>{{0, 0.1}});
  const std::vector<Landscape> a(5, wide), b(5, narrow);
  const auto r = permutation_test(a, b, 1000, 5);
  const auto again = permutation_test(a, b, 1000, 5);
  const auto same = permutation_test(a, a, 1000, 5);
  std::ostringstream os;
  os << "p = " << r.p_value << ", identical-sample p = " << same.p_value;
  const bool ok = r.p_value < 0.05 && again.p_value == r.p_value && again.exceeding == r.exceeding &&
                  same.observed_distance == 0 && same.p_value == 0;
  return {ok, os.str()};
}

}  // namespace

int main() {
  run(1, "worked reduction example", 1, worked_example);
  run(2, "square example and representative", 1, square_example);
  run(3, "stability on the perturbed triangulation", 30, stability);
  run(4, "bottleneck and Wasserstein against enumeration", 60, metric_oracle);
  run(5, "Betti numbers against rank computation", 60, homology_oracle);
  run(6, "landscapes against pointwise k-th largest", 60, landscape_oracle);
  run(7, "sliding-window sin dominance", 300, sliding_window);
  run(8, "distance-to-circle bitmap", 60, circle_bitmap);
  run(9, "percolation sanity", 60, percolation);
  run(10, "permutation test", 60, permutation);
  std::printf("%d of 10 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
