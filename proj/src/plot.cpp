#include "tda/plot.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>

namespace tda::plot {
namespace {

constexpr double kWidth = 640, kHeight = 480;
constexpr double kLeft = 60, kRight = 20, kTop = 20, kBottom = 50;
constexpr std::array<const char*, 6> kPalette{"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b"};

const char* colour(int dim) { return kPalette[static_cast<std::size_t>(dim) % kPalette.size()]; }

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

struct Range {
  double lo = 0, hi = 1;

  static Range padded(double lo, double hi) {
    if (!(hi > lo)) {
      lo -= 0.5;
      hi += 0.5;
    }
    const double pad = 0.05 * (hi - lo);
    return {lo - pad, hi + pad};
  }
};

struct Frame {
  Range x, y;
  double px(double v) const { return kLeft + (v - x.lo) / (x.hi - x.lo) * (kWidth - kLeft - kRight); }
  double py(double v) const { return kHeight - kBottom - (v - y.lo) / (y.hi - y.lo) * (kHeight - kTop - kBottom); }
};

std::string header() {
  return "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + num(kWidth) +
         "\" height=\"" + num(kHeight) + "\" viewBox=\"0 0 " + num(kWidth) + ' ' + num(kHeight) +
         "\">\n<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
}

std::string axes(const Frame& f, const std::string& xlabel, const std::string& ylabel) {
  std::string s;
  const double x0 = kLeft, x1 = kWidth - kRight, y0 = kHeight - kBottom, y1 = kTop;
  s += "<g class=\"axes\" stroke=\"black\" stroke-width=\"1\">\n";
  s += "<line x1=\"" + num(x0) + "\" y1=\"" + num(y0) + "\" x2=\"" + num(x1) + "\" y2=\"" + num(y0) + "\"/>\n";
  s += "<line x1=\"" + num(x0) + "\" y1=\"" + num(y0) + "\" x2=\"" + num(x0) + "\" y2=\"" + num(y1) + "\"/>\n";
  s += "</g>\n<g font-family=\"sans-serif\" font-size=\"11\">\n";
  for (int t = 0; t <= 4; ++t) {
    const double vx = f.x.lo + (f.x.hi - f.x.lo) * t / 4.0;
    const double vy = f.y.lo + (f.y.hi - f.y.lo) * t / 4.0;
    s += "<text x=\"" + num(f.px(vx)) + "\" y=\"" + num(y0 + 15) + "\" text-anchor=\"middle\">" + num(vx) + "</text>\n";
    s += "<text x=\"" + num(x0 - 5) + "\" y=\"" + num(f.py(vy) + 4) + "\" text-anchor=\"end\">" + num(vy) + "</text>\n";
  }
  s += "<text x=\"" + num((x0 + x1) / 2) + "\" y=\"" + num(kHeight - 10) + "\" text-anchor=\"middle\">" + xlabel + "</text>\n";
  s += "<text x=\"15\" y=\"" + num((y0 + y1) / 2) + "\" text-anchor=\"middle\" transform=\"rotate(-90 15 " +
       num((y0 + y1) / 2) + ")\">" + ylabel + "</text>\n</g>\n";
  return s;
}

struct Extent {
  double lo = kInfinity, hi = -kInfinity;
  bool any_essential = false;
  void add(double v) {
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
};

Extent diagram_extent(const PersistenceDiagram& diagram) {
  Extent e;
  for (const auto& p : diagram.points) {
    e.add(p.birth);
    if (p.essential())
      e.any_essential = true;
    else
      e.add(p.death);
  }
  if (e.lo > e.hi) e.lo = 0, e.hi = 1;
  return e;
}

}  // namespace

std::string persistence_diagram_svg(const PersistenceDiagram& diagram) {
  auto sorted = diagram;
  sorted.sort();
  const auto e = diagram_extent(sorted);
  // Essential points get their own row just above the finite range.
  const double inf_row = e.hi + (e.any_essential ? 0.1 * std::max(e.hi - e.lo, 1.0) : 0.0);
  const Range r = Range::padded(e.lo, inf_row);
  const Frame f{r, r};

  std::string s = header() + axes(f, "birth", "death");
  s += "<line class=\"diagonal\" x1=\"" + num(f.px(r.lo)) + "\" y1=\"" + num(f.py(r.lo)) + "\" x2=\"" + num(f.px(r.hi)) +
       "\" y2=\"" + num(f.py(r.hi)) + "\" stroke=\"gray\"/>\n";
  if (e.any_essential)
    s += "<line class=\"infinity\" x1=\"" + num(f.px(r.lo)) + "\" y1=\"" + num(f.py(inf_row)) + "\" x2=\"" +
         num(f.px(r.hi)) + "\" y2=\"" + num(f.py(inf_row)) + "\" stroke=\"gray\" stroke-dasharray=\"4 3\"/>\n" +
         "<text x=\"" + num(kLeft - 5) + "\" y=\"" + num(f.py(inf_row) + 4) +
         "\" font-family=\"sans-serif\" font-size=\"11\" text-anchor=\"end\">inf</text>\n";
  for (const auto& p : sorted.points) {
    const double death = p.essential() ? inf_row : p.death;
    s += std::string("<circle class=\"") + (p.essential() ? "essential" : "point") + "\" cx=\"" + num(f.px(p.birth)) +
         "\" cy=\"" + num(f.py(death)) + "\" r=\"4\" fill=\"" + colour(p.dimension) + "\"><title>H" +
         std::to_string(p.dimension) + "</title></circle>\n";
  }
  return s + "</svg>\n";
}

std::string barcode_svg(const PersistenceDiagram& diagram) {
  auto sorted = diagram;
  sorted.sort();
  const auto e = diagram_extent(sorted);
  const double inf_end = e.hi + (e.any_essential ? 0.1 * std::max(e.hi - e.lo, 1.0) : 0.0);
  const double rows = static_cast<double>(std::max<std::size_t>(sorted.points.size(), 1));
  const Frame f{Range::padded(e.lo, inf_end), Range::padded(0, rows)};

  std::string s = header() + axes(f, "filtration", "bar");
  for (std::size_t i = 0; i < sorted.points.size(); ++i) {
    const auto& p = sorted.points[i];
    const double y = f.py(rows - static_cast<double>(i) - 0.5);
    s += std::string("<line class=\"bar\" x1=\"") + num(f.px(p.birth)) + "\" y1=\"" + num(y) + "\" x2=\"" +
         num(f.px(p.essential() ? inf_end : p.death)) + "\" y2=\"" + num(y) + "\" stroke=\"" + colour(p.dimension) +
         "\" stroke-width=\"3\"" + (p.essential() ? " stroke-dasharray=\"6 2\"" : "") + "/>\n";
  }
  return s + "</svg>\n";
}

std::string landscape_svg(const Landscape& landscape) {
  Extent ex, ey;
  ey.add(0);
  for (const auto& level : landscape.levels)
    for (const auto& p : level) {
      ex.add(p.x);
      ey.add(p.value);
    }
  if (ex.lo > ex.hi) ex.lo = 0, ex.hi = 1;
  const Frame f{Range::padded(ex.lo, ex.hi), Range::padded(ey.lo, ey.hi)};

  std::string s = header() + axes(f, "x", "lambda");
  for (std::size_t k = 0; k < landscape.levels.size(); ++k) {
    s += "<polyline class=\"level\" fill=\"none\" stroke=\"" + std::string(colour(static_cast<int>(k))) + "\" points=\"";
    for (std::size_t i = 0; i < landscape.levels[k].size(); ++i) {
      const auto& p = landscape.levels[k][i];
      s += (i ? " " : "") + num(f.px(p.x)) + ',' + num(f.py(p.value));
    }
    s += "\"><title>lambda_" + std::to_string(k + 1) + "</title></polyline>\n";
  }
  return s + "</svg>\n";
}

}  // namespace tda::plot
