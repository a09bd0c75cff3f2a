#include "tda/landscape.hpp"

#include <algorithm>
#include <cmath>

#include "tda/error.hpp"

namespace tda {

Real triangle_function(Real birth, Real death, Real x) {
  if (!(birth < death)) throw Error(ErrorCode::BadInterval, "tent needs birth < death");
  const Real mid = (birth + death) / 2;
  if (x > birth && x <= mid) return x - birth;
  if (x > mid && x < death) return death - x;
  return 0;
}

namespace {

CriticalPoint apex(const Interval& i) { return {(i.birth + i.death) / 2, (i.death - i.birth) / 2}; }

void push_point(std::vector<CriticalPoint>& level, CriticalPoint p) {
  if (!level.empty() && level.back().x == p.x) {
    // Touching tents produce a repeated zero; keep the first.
    return;
  }
  level.push_back(p);
}

}  // namespace

Landscape build_landscape(std::span<const Interval> intervals, std::optional<Real> essential_cutoff) {
  std::vector<Interval> bars;
  for (auto i : intervals) {
    if (i.death == kInfinity) {
      if (!essential_cutoff) continue;
      i.death = *essential_cutoff;
    }
    if (i.birth < i.death) bars.push_back(i);
  }
  const auto by_birth_then_longest = [](const Interval& a, const Interval& b) {
    if (a.birth != b.birth) return a.birth < b.birth;
    return a.death > b.death;
  };

  // Each pass peels off the upper envelope; the parts of tents hidden under it
  // (plus the clipped overlaps) go on to the next level.
  Landscape out;
  while (!bars.empty()) {
    std::sort(bars.begin(), bars.end(), by_birth_then_longest);
    std::vector<CriticalPoint> level{{bars[0].birth, 0}, apex(bars[0])};
    Interval last = bars[0];
    std::vector<Interval> rest;
    std::size_t i = 1;
    while (i < bars.size()) {
      std::size_t step = 1;
      const Interval cur = bars[i];
      if (cur.birth >= last.birth && cur.death > last.death) {
        if (cur.birth < last.death) {
          const Interval overlap{cur.birth, last.death};
          push_point(level, apex(overlap));
          while (i + step < bars.size() && bars[i + step].birth == overlap.birth &&
                 overlap.death <= bars[i + step].death) {
            rest.push_back(bars[i + step]);
            ++step;
          }
          rest.push_back(overlap);
          while (i + step < bars.size() && overlap.birth <= bars[i + step].birth &&
                 overlap.death >= bars[i + step].death) {
            rest.push_back(bars[i + step]);
            ++step;
          }
        } else {
          push_point(level, {last.death, 0});
          push_point(level, {cur.birth, 0});
        }
        push_point(level, apex(cur));
        last = cur;
      } else {
        rest.push_back(cur);
      }
      i += step;
    }
    push_point(level, {last.death, 0});
    out.levels.push_back(std::move(level));
    bars = std::move(rest);
  }
  return out;
}

Landscape build_landscape(const PersistenceDiagram& diagram, int dimension, std::optional<Real> essential_cutoff) {
  return build_landscape(diagram.intervals(dimension), essential_cutoff);
}

namespace {

Real evaluate_level(const std::vector<CriticalPoint>& level, Real x) {
  if (level.empty() || x <= level.front().x || x >= level.back().x) return 0;
  auto hi = std::upper_bound(level.begin(), level.end(), x,
                             [](Real v, const CriticalPoint& p) { return v < p.x; });
  auto lo = hi - 1;
  if (lo->x == x) return lo->value;
  const Real t = (x - lo->x) / (hi->x - lo->x);
  return lo->value + t * (hi->value - lo->value);
}

const std::vector<CriticalPoint>& level_or_empty(const Landscape& l, std::size_t k) {
  static const std::vector<CriticalPoint> empty;
  return k < l.levels.size() ? l.levels[k] : empty;
}

std::vector<Real> merged_breakpoints(std::initializer_list<const std::vector<CriticalPoint>*> levels) {
  std::vector<Real> xs;
  for (const auto* level : levels)
    for (const auto& p : *level) xs.push_back(p.x);
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  return xs;
}

// ∫ |f|^p over a segment of length `len` where f is linear from a to b.
Real integrate_power(Real a, Real b, Real len, Real p) {
  if (len <= 0) return 0;
  if ((a < 0 && b > 0) || (a > 0 && b < 0)) {
    const Real root = len * std::abs(a) / (std::abs(a) + std::abs(b));
    return integrate_power(a, 0, root, p) + integrate_power(0, b, len - root, p);
  }
  a = std::abs(a);
  b = std::abs(b);
  if (p == 1) return len * (a + b) / 2;
  if (p == 2) return len * (a * a + a * b + b * b) / 3;
  if (std::abs(b - a) <= 1e-12 * std::max(a, b)) return len * std::pow((a + b) / 2, p);
  return len * (std::pow(b, p + 1) - std::pow(a, p + 1)) / ((p + 1) * (b - a));
}

}  // namespace

Real evaluate_landscape(const Landscape& landscape, std::size_t k, Real x) {
  if (k == 0) throw Error(ErrorCode::InvalidArgument, "landscape levels start at 1");
  return evaluate_level(level_or_empty(landscape, k - 1), x);
}

Landscape average_landscapes(std::span<const Landscape> landscapes) {
  if (landscapes.empty()) throw Error(ErrorCode::EmptyInput, "cannot average zero landscapes");
  std::size_t depth = 0;
  for (const auto& l : landscapes) depth = std::max(depth, l.levels.size());

  Landscape out;
  const Real scale = 1.0 / static_cast<Real>(landscapes.size());
  for (std::size_t k = 0; k < depth; ++k) {
    std::vector<Real> xs;
    for (const auto& l : landscapes)
      for (const auto& p : level_or_empty(l, k)) xs.push_back(p.x);
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
    std::vector<CriticalPoint> level;
    level.reserve(xs.size());
    for (Real x : xs) {
      Real sum = 0;
      for (const auto& l : landscapes) sum += evaluate_level(level_or_empty(l, k), x);
      level.push_back({x, sum * scale});
    }
    out.levels.push_back(std::move(level));
  }
  return out;
}

Real landscape_distance(const Landscape& a, const Landscape& b, Real p) {
  if (!(p >= 1)) throw Error(ErrorCode::BadExponent, "p must be >= 1");
  const std::size_t depth = std::max(a.levels.size(), b.levels.size());
  const bool sup = std::isinf(p);
  Real total = 0;
  for (std::size_t k = 0; k < depth; ++k) {
    const auto& la = level_or_empty(a, k);
    const auto& lb = level_or_empty(b, k);
    const auto xs = merged_breakpoints({&la, &lb});
    Real previous = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
      const Real diff = evaluate_level(la, xs[i]) - evaluate_level(lb, xs[i]);
      if (sup)
        total = std::max(total, std::abs(diff));
      else if (i > 0)
        total += integrate_power(previous, diff, xs[i] - xs[i - 1], p);
      previous = diff;
    }
  }
  return sup ? total : std::pow(total, 1.0 / p);
}

Eigen::MatrixXd sample_landscape(const Landscape& landscape, Real x_min, Real x_max, Eigen::Index samples) {
  if (samples < 2) throw Error(ErrorCode::InvalidArgument, "need at least two samples");
  Eigen::MatrixXd out(static_cast<Eigen::Index>(landscape.levels.size()), samples);
  for (Eigen::Index k = 0; k < out.rows(); ++k)
    for (Eigen::Index s = 0; s < samples; ++s) {
      const Real x = x_min + (x_max - x_min) * static_cast<Real>(s) / static_cast<Real>(samples - 1);
      out(k, s) = evaluate_level(landscape.levels[static_cast<std::size_t>(k)], x);
    }
  return out;
}

}  // namespace tda
