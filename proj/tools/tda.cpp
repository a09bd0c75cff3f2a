// tda: command-line front end.
//
// Exit codes: 0 ok, 1 usage, 2 unparseable input, 3 precondition violation,
// 4 internal error. TDA_SEED, when set, replaces the default seed of the
// randomized commands; an explicit --seed still wins.

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "tda/io.hpp"
#include "tda/plot.hpp"
#include "tda/tda.hpp"

namespace fs = std::filesystem;
using namespace tda;

namespace {

constexpr std::uint64_t kDefaultSeed = 20240601;

std::uint64_t default_seed() {
  if (const char* env = std::getenv("TDA_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw Error(ErrorCode::InvalidArgument, std::string("TDA_SEED is not an unsigned integer: ") + env);
    }
  }
  return kDefaultSeed;
}

void emit(const std::string& out, const std::string& text) {
  if (out.empty() || out == "-")
    std::cout << text;
  else
    io::write_file_atomic(out, text);
}

std::vector<double> split_list(const std::string& text, const char* what) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stod(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw Error(ErrorCode::InvalidArgument, std::string("bad ") + what + " entry '" + item + "'");
    }
  }
  if (out.empty()) throw Error(ErrorCode::InvalidArgument, std::string("empty ") + what);
  return out;
}

Landscape load_landscape(const std::string& path, int dim, std::optional<Real> cutoff) {
  const auto text = io::read_file(path);
  if (io::looks_like_landscape(text)) return io::parse_landscape(text);
  return build_landscape(io::parse_diagram(text), dim, cutoff);
}

// Dominance of the longest H1 interval over the runner-up; inf when alone.
double h1_dominance(const PersistenceDiagram& d) {
  std::vector<double> pers;
  for (const auto& p : d.points)
    if (p.dimension == 1) pers.push_back(p.persistence());
  std::sort(pers.rbegin(), pers.rend());
  if (pers.empty()) return 0;
  if (pers.size() == 1 || pers[1] == 0) return kInfinity;
  return pers[0] / pers[1];
}

Eigen::VectorXd demo_sin(Index samples) {
  Eigen::VectorXd v(samples);
  for (Index i = 0; i < samples; ++i)
    v(i) = std::sin(10 * std::numbers::pi * static_cast<double>(i) / static_cast<double>(samples - 1));
  return v;
}

struct RipsArgs {
  std::string input, format = "points", engine = "implicit", out;
  double max_edge = kInfinity;
  int max_dim = 2;
};

void run_rips(const RipsArgs& a) {
  if (a.max_dim < 1) throw Error(ErrorCode::InvalidArgument, "--max-dim must be >= 1");
  if (!(a.max_edge >= 0)) throw Error(ErrorCode::InvalidArgument, "--max-edge must be >= 0");
  const auto text = io::read_file(a.input);
  const DistanceMatrix d =
      a.format == "matrix" ? io::parse_distance_matrix(text) : euclidean_distances(io::parse_point_cloud(text));
  check_distance_matrix(d);
  PersistenceDiagram dgm;
  if (a.engine == "explicit") {
    PersistenceOptions options;
    options.max_homology_dimension = a.max_dim;
    dgm = compute_persistence(rips_from_distance_matrix(d, a.max_edge, a.max_dim), options);
  } else {
    dgm = rips_persistence(d, a.max_edge, a.max_dim);
  }
  emit(a.out, io::format_diagram(dgm));
}

struct CubicalArgs {
  std::string input, out;
  int demo_circle = 0;
  bool binary = false;
};

void run_cubical(const CubicalArgs& a) {
  GridBitmap bitmap;
  if (a.demo_circle > 0)
    bitmap = circle_distance_bitmap(a.demo_circle);
  else if (!a.input.empty())
    bitmap = io::parse_grid(io::read_file(a.input));
  else
    throw CLI::RequiredError("grid file or --demo-circle");
  bitmap.check();
  if (a.binary && !bitmap.is_binary()) throw Error(ErrorCode::InvalidArgument, "--binary needs values 0 or 1");
  const auto k = cubical_from_bitmap(bitmap, a.binary ? BitmapMode::Presence : BitmapMode::Sublevel);
  emit(a.out, io::format_diagram(compute_persistence(k)));
}

struct DistanceArgs {
  std::vector<std::string> inputs;
  std::string metric = "bottleneck", out;
  double q = 1;
  int dim = 0;
  std::optional<double> cutoff;
};

void run_distance(const DistanceArgs& a) {
  std::vector<PersistenceDiagram> diagrams;
  for (const auto& path : a.inputs) diagrams.push_back(io::parse_diagram(io::read_file(path)));
  MetricSpec spec;
  spec.metric = a.metric == "wasserstein" ? DiagramMetric::Wasserstein : DiagramMetric::Bottleneck;
  spec.q = a.q;
  spec.dimension = a.dim;
  spec.options.essential_cutoff = a.cutoff;
  if (spec.metric == DiagramMetric::Wasserstein && !(a.q >= 1 && std::isfinite(a.q)))
    throw Error(ErrorCode::BadExponent, "--q must be a finite value >= 1");
  const auto m = distance_matrix(diagrams, spec);
  if (diagrams.size() == 2)
    emit(a.out, io::format_real(m(0, 1)) + '\n');
  else
    emit(a.out, io::format_distance_matrix(m));
}

struct LandscapeArgs {
  std::vector<std::string> inputs;
  std::string distance, out;
  bool average = false;
  int dim = 0;
  double p = 2;
  std::optional<double> cutoff;
};

void run_landscape(const LandscapeArgs& a) {
  if (!(a.p >= 1)) throw Error(ErrorCode::BadExponent, "--p must be >= 1 or inf");
  if (a.inputs.size() > 1 && !a.average)
    throw CLI::ValidationError("several inputs need --average");
  std::vector<Landscape> ls;
  for (const auto& path : a.inputs) ls.push_back(load_landscape(path, a.dim, a.cutoff));
  const Landscape l = a.average ? average_landscapes(ls) : ls.front();
  if (!a.distance.empty()) {
    const auto other = load_landscape(a.distance, a.dim, a.cutoff);
    emit(a.out, io::format_real(landscape_distance(l, other, a.p)) + '\n');
    return;
  }
  emit(a.out, io::format_landscape(l));
}

struct SlideArgs {
  std::string input, out;
  bool demo_sin = false, report = false;
  Index demo_samples = 1000;
  Index window = 0, stride = 1;
  double max_edge = kInfinity, noise = 0;
  int max_dim = 2;
  std::optional<std::uint64_t> seed;
};

void run_slide(const SlideArgs& a) {
  if (a.stride < 1) throw Error(ErrorCode::InvalidArgument, "--stride must be >= 1");
  if (a.max_dim < 1) throw Error(ErrorCode::InvalidArgument, "--max-dim must be >= 1");
  if (!(a.noise >= 0)) throw Error(ErrorCode::InvalidArgument, "--noise must be >= 0");
  Eigen::VectorXd series;
  if (a.demo_sin) {
    if (a.demo_samples < 2) throw Error(ErrorCode::InvalidArgument, "--demo-samples must be >= 2");
    series = demo_sin(a.demo_samples);
  } else if (!a.input.empty()) {
    series = io::parse_series(io::read_file(a.input));
  } else {
    throw CLI::RequiredError("series file or --demo-sin");
  }
  PointCloud cloud = sliding_window_embed(series, a.window);
  if (a.stride > 1) {
    PointCloud kept((cloud.rows() + a.stride - 1) / a.stride, cloud.cols());
    for (Index i = 0; i < kept.rows(); ++i) kept.row(i) = cloud.row(i * a.stride);
    cloud = std::move(kept);
  }
  if (a.noise > 0) {
    Rng rng(a.seed.value_or(default_seed()));
    for (Index i = 0; i < cloud.rows(); ++i)
      for (Index j = 0; j < cloud.cols(); ++j) cloud(i, j) += rng.uniform(0, a.noise);
  }
  const auto dgm = rips_persistence(cloud, a.max_edge, a.max_dim);
  emit(a.out, io::format_diagram(dgm));
  if (a.report) std::cerr << "h1_dominance " << io::format_real(h1_dominance(dgm)) << '\n';
}

struct PercolateArgs {
  std::string dims = "50,50", p_grid = "0,0.1,0.2,0.3,0.4,0.5,0.6,0.7,0.8,0.9,1", out;
  int trials = 10;
  std::optional<std::uint64_t> seed;
};

void run_percolate(const PercolateArgs& a) {
  std::vector<Index> dims;
  for (double d : split_list(a.dims, "--dims")) {
    if (d < 1 || d != std::floor(d)) throw Error(ErrorCode::InvalidArgument, "--dims entries must be positive integers");
    dims.push_back(static_cast<Index>(d));
  }
  const auto grid = split_list(a.p_grid, "--p-grid");
  for (double p : grid)
    if (!(p >= 0 && p <= 1)) throw Error(ErrorCode::BadProbability, "--p-grid entries must lie in [0,1]");
  if (!std::is_sorted(grid.begin(), grid.end())) throw Error(ErrorCode::InvalidArgument, "--p-grid must be sorted");
  if (a.trials < 1) throw Error(ErrorCode::InvalidArgument, "--trials must be >= 1");
  emit(a.out, io::format_percolation(percolation_sweep(dims, grid, a.trials, a.seed.value_or(default_seed()))));
}

struct PlotArgs {
  std::string input, style, out;
  int dim = 0;
};

void run_plot(const PlotArgs& a) {
  const auto text = io::read_file(a.input);
  const bool landscape_file = io::looks_like_landscape(text);
  const std::string style = a.style.empty() ? (landscape_file ? "landscape" : "diagram") : a.style;
  std::string svg;
  if (style == "landscape")
    svg = plot::landscape_svg(landscape_file ? io::parse_landscape(text) : build_landscape(io::parse_diagram(text), a.dim));
  else if (landscape_file)
    throw Error(ErrorCode::InvalidArgument, "--style " + style + " needs a diagram file");
  else if (style == "barcode")
    svg = plot::barcode_svg(io::parse_diagram(text));
  else
    svg = plot::persistence_diagram_svg(io::parse_diagram(text));
  emit(a.out, svg);
}

struct HeatMapArgs {
  std::string input, mode = "constant", window, resolution = "50", out;
  int dim = 0;
  double bandwidth = 0.1, truncation = 3;
  std::optional<double> cutoff;
};

void run_heatmap(const HeatMapArgs& a) {
  const auto dgm = io::parse_diagram(io::read_file(a.input));
  HeatMapOptions options;
  options.mode = a.mode == "persistence" ? HeatMapMode::PersistenceWeighted
                 : a.mode == "signed"    ? HeatMapMode::SignedSymmetric
                                         : HeatMapMode::Constant;
  options.bandwidth = a.bandwidth;
  options.truncation = a.truncation;
  options.essential_cutoff = a.cutoff;
  const auto res = split_list(a.resolution, "--resolution");
  if (res.size() > 2 || res[0] < 1 || res.back() < 1 || res[0] != std::floor(res[0]) || res.back() != std::floor(res.back()))
    throw Error(ErrorCode::InvalidArgument, "--resolution is N or N,M with positive integers");
  options.birth_resolution = static_cast<Eigen::Index>(res[0]);
  options.death_resolution = static_cast<Eigen::Index>(res.back());
  if (!a.window.empty()) {
    const auto w = split_list(a.window, "--window");
    if (w.size() != 4) throw Error(ErrorCode::InvalidArgument, "--window is bmin,bmax,dmin,dmax");
    options.window = {w[0], w[1], w[2], w[3]};
  } else {
    // Square window over every finite coordinate, padded by 5%.
    double lo = kInfinity, hi = -kInfinity;
    for (const auto& iv : dgm.intervals(a.dim)) {
      const double d = iv.death == kInfinity ? a.cutoff.value_or(iv.birth) : iv.death;
      lo = std::min({lo, iv.birth, d});
      hi = std::max({hi, iv.birth, d});
    }
    if (lo > hi) lo = 0, hi = 1;
    const double pad = hi > lo ? 0.05 * (hi - lo) : 0.5;
    options.window = {lo - pad, hi + pad, lo - pad, hi + pad};
  }
  emit(a.out, io::format_heat_map(build_heat_map(dgm, a.dim, options)));
}

struct PermTestArgs {
  std::string dir_a, dir_b, out;
  int n = 1000, dim = 0;
  double p = 2;
  std::optional<double> cutoff;
  std::optional<std::uint64_t> seed;
};

std::vector<Landscape> load_directory(const std::string& dir, int dim, std::optional<Real> cutoff) {
  if (!fs::is_directory(dir)) throw Error(ErrorCode::ParseError, "not a directory: " + dir);
  std::vector<fs::path> files;
  for (const auto& e : fs::directory_iterator(dir))
    if (e.is_regular_file()) files.push_back(e.path());
  std::sort(files.begin(), files.end());
  std::vector<Landscape> out;
  for (const auto& f : files) out.push_back(load_landscape(f.string(), dim, cutoff));
  return out;
}

void run_permtest(const PermTestArgs& a) {
  const auto la = load_directory(a.dir_a, a.dim, a.cutoff);
  const auto lb = load_directory(a.dir_b, a.dim, a.cutoff);
  const auto r = permutation_test(la, lb, a.n, a.seed.value_or(default_seed()), a.p);
  emit(a.out, "p_value " + io::format_real(r.p_value) + "\nobserved_distance " + io::format_real(r.observed_distance) +
                  "\nexceeding " + std::to_string(r.exceeding) + "\nshuffles " + std::to_string(r.shuffles) + '\n');
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Persistent homology of point clouds, distance matrices, grids and time series"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "tda 0.1.0");

  const std::vector<std::string> metric_names{"bottleneck", "wasserstein"};

  RipsArgs rips;
  auto* c_rips = app.add_subcommand("rips", "Vietoris-Rips persistence of a point cloud or distance matrix");
  c_rips->add_option("input", rips.input, "point cloud (CSV rows) or distance matrix file")->required();
  c_rips->add_option("--format", rips.format, "input format")->check(CLI::IsMember({"points", "matrix"}));
  c_rips->add_option("--max-edge", rips.max_edge, "largest edge length kept");
  c_rips->add_option("--max-dim", rips.max_dim, "skeleton dimension; homology is reported below it");
  c_rips->add_option("--engine", rips.engine, "implicit coboundary reduction or explicit complex")
      ->check(CLI::IsMember({"implicit", "explicit"}));
  c_rips->add_option("--out,-o", rips.out, "output diagram file (stdout when omitted)");
  c_rips->callback([&] { run_rips(rips); });

  CubicalArgs cub;
  auto* c_cub = app.add_subcommand("cubical", "persistence of a grid bitmap");
  c_cub->add_option("input", cub.input, "grid file");
  c_cub->add_option("--demo-circle", cub.demo_circle, "use the distance-to-circle field on a (2N+1)^2 grid")
      ->check(CLI::PositiveNumber);
  c_cub->add_flag("--binary", cub.binary, "treat 0/1 values as absent/present cells");
  c_cub->add_option("--out,-o", cub.out, "output diagram file");
  c_cub->callback([&] { run_cubical(cub); });

  DistanceArgs dist;
  auto* c_dist = app.add_subcommand("distance", "bottleneck or Wasserstein distance between diagrams");
  c_dist->add_option("inputs", dist.inputs, "two or more diagram files")->required()->expected(2, -1);
  c_dist->add_option("--metric", dist.metric)->check(CLI::IsMember(metric_names));
  c_dist->add_option("--q", dist.q, "Wasserstein exponent");
  c_dist->add_option("--dim", dist.dim, "homological dimension");
  c_dist->add_option("--cutoff", dist.cutoff, "replace infinite deaths by this value");
  c_dist->add_option("--out,-o", dist.out, "output file; a matrix for three or more inputs");
  c_dist->callback([&] { run_distance(dist); });

  LandscapeArgs land;
  auto* c_land = app.add_subcommand("landscape", "persistence landscapes, averages and distances");
  c_land->add_option("inputs", land.inputs, "diagram or landscape files")->required()->expected(1, -1);
  c_land->add_option("--dim", land.dim, "homological dimension");
  c_land->add_flag("--average", land.average, "average the landscapes of all inputs");
  c_land->add_option("--distance", land.distance, "print the distance to this diagram or landscape");
  c_land->add_option("--p", land.p, "exponent of the landscape distance (inf allowed)");
  c_land->add_option("--cutoff", land.cutoff, "replace infinite deaths by this value");
  c_land->add_option("--out,-o", land.out, "output file");
  c_land->callback([&] { run_landscape(land); });

  SlideArgs slide;
  auto* c_slide = app.add_subcommand("slide", "sliding-window embedding of a series, then Rips persistence");
  c_slide->add_option("input", slide.input, "series file, one value per line");
  c_slide->add_flag("--demo-sin", slide.demo_sin, "use sin sampled on [0, 10 pi]");
  c_slide->add_option("--demo-samples", slide.demo_samples, "sample count of the demo series");
  c_slide->add_option("--window,-N", slide.window, "window length")->required();
  c_slide->add_option("--stride", slide.stride, "keep every k-th window");
  c_slide->add_option("--max-edge", slide.max_edge);
  c_slide->add_option("--max-dim", slide.max_dim);
  c_slide->add_option("--noise", slide.noise, "add uniform [0, a] noise to every coordinate");
  c_slide->add_option("--seed", slide.seed, "noise seed");
  c_slide->add_flag("--report", slide.report, "print the H1 dominance ratio to stderr");
  c_slide->add_option("--out,-o", slide.out, "output diagram file");
  c_slide->callback([&] { run_slide(slide); });

  PercolateArgs perc;
  auto* c_perc = app.add_subcommand("percolate", "mean Betti numbers of random cubical complexes");
  c_perc->add_option("--dims", perc.dims, "grid extents, comma separated");
  c_perc->add_option("--p-grid", perc.p_grid, "probabilities, comma separated and ascending");
  c_perc->add_option("--trials", perc.trials);
  c_perc->add_option("--seed", perc.seed);
  c_perc->add_option("--out,-o", perc.out, "output CSV file");
  c_perc->callback([&] { run_percolate(perc); });

  PlotArgs plt;
  auto* c_plot = app.add_subcommand("plot", "SVG plot of a diagram, barcode or landscape");
  c_plot->add_option("input", plt.input, "diagram or landscape file")->required();
  c_plot->add_option("--style", plt.style)->check(CLI::IsMember({"diagram", "barcode", "landscape"}));
  c_plot->add_option("--dim", plt.dim, "dimension used when a landscape is built from a diagram");
  c_plot->add_option("--out,-o", plt.out, "output SVG file");
  c_plot->callback([&] { run_plot(plt); });

  HeatMapArgs heat;
  auto* c_heat = app.add_subcommand("heatmap", "kernel-smoothed diagram on a grid");
  c_heat->add_option("input", heat.input, "diagram file")->required();
  c_heat->add_option("--dim", heat.dim);
  c_heat->add_option("--mode", heat.mode)->check(CLI::IsMember({"constant", "persistence", "signed"}));
  c_heat->add_option("--bandwidth", heat.bandwidth);
  c_heat->add_option("--truncation", heat.truncation, "kernel radius in bandwidths (inf for none)");
  c_heat->add_option("--window", heat.window, "bmin,bmax,dmin,dmax");
  c_heat->add_option("--resolution", heat.resolution, "N or N,M cells");
  c_heat->add_option("--cutoff", heat.cutoff, "replace infinite deaths by this value");
  c_heat->add_option("--out,-o", heat.out, "output grid file");
  c_heat->callback([&] { run_heatmap(heat); });

  PermTestArgs perm;
  auto* c_perm = app.add_subcommand("permtest", "two-sample permutation test on landscapes");
  c_perm->add_option("dir_a", perm.dir_a, "directory of diagram files")->required();
  c_perm->add_option("dir_b", perm.dir_b, "directory of diagram files")->required();
  c_perm->add_option("--n", perm.n, "number of shuffles");
  c_perm->add_option("--seed", perm.seed);
  c_perm->add_option("--dim", perm.dim);
  c_perm->add_option("--p", perm.p, "landscape distance exponent");
  c_perm->add_option("--cutoff", perm.cutoff, "replace infinite deaths by this value");
  c_perm->add_option("--out,-o", perm.out);
  c_perm->callback([&] { run_permtest(perm); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  } catch (const Error& e) {
    std::cerr << "tda: " << e.what() << '\n';
    return e.code() == ErrorCode::ParseError ? 2 : 3;
  } catch (const std::exception& e) {
    std::cerr << "tda: internal error: " << e.what() << '\n';
    return 4;
  }
  return 0;
}
