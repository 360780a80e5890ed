#include "distchaos/triangular/heightfield.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace distchaos::triangular {

namespace {

// Hull of orbit samples x_j with j = c (mod 2^level) over the sample window.
struct ClassHull {
  Band band{std::numeric_limits<double>::infinity(), -std::numeric_limits<double>::infinity()};
  std::uint64_t count = 0;
};

ClassHull class_hull(const DyadicIntervalSystem& sys, std::uint64_t level, std::uint64_t c) {
  ClassHull h;
  const std::uint64_t mask = (std::uint64_t{1} << level) - 1;
  for (std::uint64_t j = sys.window_begin(); j < sys.window_end(); ++j) {
    if ((j & mask) != c) continue;
    const double v = sys.orbit[static_cast<std::size_t>(j)];
    h.band.lo = std::min(h.band.lo, v);
    h.band.hi = std::max(h.band.hi, v);
    ++h.count;
  }
  return h;
}

// Nearest-to-midpoint periodic point of period 2^(level-1) inside the open
// gap (lo, hi): scan for sign changes of f^p(x) - x, bisect the bracket whose
// midpoint is closest to the gap's midpoint.
HeightField::ZeroAnchor gap_anchor(const DyadicIntervalSystem& sys, std::uint64_t level,
                                   double lo, double hi) {
  HeightField::ZeroAnchor a;
  a.level = level;
  const std::uint64_t period = std::uint64_t{1} << (level - 1);
  auto g = [&](double x) { return sys.map.iterate(x, period) - x; };
  const int cells = 64;
  const double mid = 0.5 * (lo + hi);
  double best_lo = 0.0, best_hi = 0.0, best_dist = std::numeric_limits<double>::infinity();
  double prev_x = lo + (hi - lo) * 1e-6;  // stay inside the open gap
  double prev_v = g(prev_x);
  for (int i = 1; i <= cells; ++i) {
    const double x = lo + (hi - lo) * (1e-6 + (1.0 - 2e-6) * static_cast<double>(i) / cells);
    const double v = g(x);
    if ((prev_v <= 0.0 && v >= 0.0) || (prev_v >= 0.0 && v <= 0.0)) {
      const double center = 0.5 * (prev_x + x);
      const double dist = std::fabs(center - mid);
      if (dist < best_dist) {
        best_dist = dist;
        best_lo = prev_x;
        best_hi = x;
      }
    }
    prev_x = x;
    prev_v = v;
  }
  if (!std::isfinite(best_dist)) {
    // No sign change at scan resolution: pin the gap midpoint instead.
    a.x = mid;
    a.from_periodic_point = false;
    a.residual = std::fabs(g(mid));
    return a;
  }
  double blo = best_lo, bhi = best_hi;
  double vlo = g(blo);
  for (int it = 0; it < 200; ++it) {
    const double m = 0.5 * (blo + bhi);
    if (m == blo || m == bhi) break;
    const double vm = g(m);
    if ((vlo <= 0.0 && vm <= 0.0) || (vlo >= 0.0 && vm >= 0.0)) {
      blo = m;
      vlo = vm;
    } else {
      bhi = m;
    }
  }
  a.x = 0.5 * (blo + bhi);
  a.from_periodic_point = true;
  a.residual = std::fabs(g(a.x));
  return a;
}

}  // namespace

double HeightField::operator()(double x) const {
  if (knots.empty()) throw std::logic_error("height field: empty");
  if (x <= knots.front().x) return knots.front().h;
  if (x >= knots.back().x) return knots.back().h;
  std::size_t lo = 0, hi = knots.size() - 1;
  while (hi - lo > 1) {
    const std::size_t mid = (lo + hi) / 2;
    if (knots[mid].x <= x) lo = mid; else hi = mid;
  }
  const Knot& a = knots[lo];
  const Knot& b = knots[hi];
  if (x == a.x) return a.h;
  if (x == b.x) return b.h;
  return a.h + (b.h - a.h) * ((x - a.x) / (b.x - a.x));
}

HeightField build_height_field(const DyadicIntervalSystem& sys, const NSequence& seq,
                               std::uint64_t depth, std::uint64_t extra_levels) {
  if (depth == 0 || depth > sys.max_level) {
    throw std::invalid_argument("build_height_field: depth must lie in [1, system max level]");
  }
  HeightField f;

  // Plateaus: resolved levels from the band system, beyond-resolution levels
  // from deeper orbit classes with clipped heights.
  const std::uint64_t top_index = plateau_index(seq, depth);
  for (std::uint64_t n = 1; n <= depth + extra_levels; ++n) {
    HeightField::Plateau p;
    p.level = n;
    if (n <= depth) {
      const Band& b = sys.band(n, std::uint64_t{1} << (n - 1));
      p.lo = b.lo;
      p.hi = b.hi;
      p.height = std::ldexp(1.0, -static_cast<int>(plateau_index(seq, n) - 1));
      p.sample_count = ((std::uint64_t{1} << sys.max_level) / (std::uint64_t{1} << n)) *
                       sys.samples_per_class;
    } else {
      if (n - 1 >= 63) break;
      const ClassHull h = class_hull(sys, n, std::uint64_t{1} << (n - 1));
      if (h.count == 0) break;  // deeper classes have no samples in the window
      p.lo = h.band.lo;
      p.hi = h.band.hi;
      p.height = std::ldexp(1.0, -static_cast<int>(top_index - 1)) *
                 std::pow(0.25, static_cast<double>(n - depth));
      p.sample_count = h.count;
      p.beyond_resolution = true;
    }
    f.plateaus.push_back(p);
  }

  // Zero anchors: fixed points of the unit interval plus one periodic point
  // in the gap between the core band and the plateau at every level.
  f.anchors.push_back({0.0, 0, false, 0.0});
  f.anchors.push_back({0.5, 0, false, 0.0});
  f.anchors.push_back({1.0, 0, false, 0.0});
  for (const auto& p : f.plateaus) {
    const std::uint64_t n = p.level;
    Band core;
    if (!p.beyond_resolution) {
      core = sys.band(n, 0);
    } else {
      const ClassHull h = class_hull(sys, n, 0);
      if (h.count == 0) continue;
      core = h.band;
    }
    // The gap between the core band and this plateau (order varies by level).
    double glo, ghi;
    if (core.hi < p.lo) {
      glo = core.hi;
      ghi = p.lo;
    } else if (p.hi < core.lo) {
      glo = p.hi;
      ghi = core.lo;
    } else {
      throw std::runtime_error("build_height_field: core band and plateau overlap at level " +
                               std::to_string(n));
    }
    f.anchors.push_back(gap_anchor(sys, n, glo, ghi));
  }

  // Assemble knots: anchors at height 0, plateau edges at plateau height.
  for (const auto& a : f.anchors) f.knots.push_back({a.x, 0.0});
  for (const auto& p : f.plateaus) {
    f.knots.push_back({p.lo, p.height});
    if (p.hi != p.lo) f.knots.push_back({p.hi, p.height});
  }
  std::sort(f.knots.begin(), f.knots.end(),
            [](const HeightField::Knot& a, const HeightField::Knot& b) { return a.x < b.x; });
  for (std::size_t i = 0; i + 1 < f.knots.size(); ++i) {
    if (f.knots[i].x == f.knots[i + 1].x) {
      if (f.knots[i].h != f.knots[i + 1].h) {
        throw std::runtime_error("build_height_field: conflicting heights at x = " +
                                 std::to_string(f.knots[i].x));
      }
      f.knots.erase(f.knots.begin() + static_cast<std::ptrdiff_t>(i) + 1);
      --i;
    }
  }

  // No foreign knot may lie strictly inside a plateau: that would bend the
  // constant segment.
  for (const auto& p : f.plateaus) {
    for (const auto& k : f.knots) {
      if (k.x > p.lo && k.x < p.hi && k.h != p.height) {
        throw std::runtime_error("build_height_field: knot invades plateau at level " +
                                 std::to_string(p.level));
      }
    }
  }
  return f;
}

}  // namespace distchaos::triangular
