#include "distchaos/triangular/skew.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace distchaos::triangular {

namespace {

inline double tent2(double y) { return y < 0.5 ? 2.0 * y : 2.0 * (1.0 - y); }

}  // namespace

core::Vec2 TriangularMap::operator()(const core::Vec2& p) const {
  return core::Vec2{base(p.x), heights(p.x) * tent2(p.y)};
}

core::System2D TriangularMap::system() const {
  TriangularMap copy = *this;
  return core::System2D{id, [copy](const core::Vec2& p) { return copy(p); }};
}

TriangularMap make_triangular(const interval::IntervalMap1D& base, HeightField field) {
  TriangularMap m;
  m.base = base;
  m.heights = std::move(field);
  m.id = "triangular(" + base.id() + ")";
  return m;
}

core::Vec2 eval_triangular(const TriangularMap& m, const core::Vec2& p) { return m(p); }

FiberTrace fiber_range(const TriangularMap& m, const std::vector<double>& base_orbit,
                       std::uint64_t start, std::uint64_t steps, double v0) {
  if (!(v0 >= 0.0 && v0 <= 1.0)) {
    throw std::invalid_argument("fiber_range: v0 must lie in [0, 1]");
  }
  if (start + steps >= base_orbit.size()) {
    throw std::invalid_argument("fiber_range: trace runs past the stored base orbit");
  }
  FiberTrace tr;
  tr.start = start;
  tr.v0 = v0;
  tr.v.reserve(static_cast<std::size_t>(steps) + 1);
  double v = v0;
  tr.v.push_back(v);
  for (std::uint64_t t = 0; t < steps; ++t) {
    const double x = base_orbit[static_cast<std::size_t>(start + t)];
    v = m.heights(x) * std::min(2.0 * v, 1.0);
    tr.v.push_back(v);
  }
  return tr;
}

FiberTailStats lemma3_statistics(const FiberTrace& trace, double tail_fraction) {
  if (!(tail_fraction > 0.0 && tail_fraction <= 1.0)) {
    throw std::invalid_argument("lemma3_statistics: tail_fraction must lie in (0, 1]");
  }
  FiberTailStats s;
  const std::size_t n = trace.v.size();
  const std::size_t window = std::max<std::size_t>(1, static_cast<std::size_t>(
                                                          std::floor(tail_fraction * static_cast<double>(n))));
  const std::size_t begin = n - window;
  s.window_begin = begin;
  s.window_size = window;
  s.sup = -1.0;
  s.inf = 2.0;
  for (std::size_t i = begin; i < n; ++i) {
    const double v = trace.v[i];
    s.sup = std::max(s.sup, v);
    s.inf = std::min(s.inf, v);
    if (v >= 0.9) ++s.count_high;
    if (v <= std::ldexp(1.0, -5)) ++s.count_below_5;
    if (v <= std::ldexp(1.0, -8)) ++s.count_below_8;
  }
  return s;
}

bool k_set_test(const DyadicIntervalSystem& sys, const HeightField& field, double x,
                std::uint64_t orbit_len, double tol) {
  std::vector<double> anchor_pts;
  anchor_pts.reserve(field.anchors.size());
  for (const auto& a : field.anchors) anchor_pts.push_back(a.x);
  std::sort(anchor_pts.begin(), anchor_pts.end());
  auto near_anchor = [&](double p) {
    auto it = std::lower_bound(anchor_pts.begin(), anchor_pts.end(), p);
    if (it != anchor_pts.end() && std::fabs(*it - p) <= tol) return true;
    if (it != anchor_pts.begin() && std::fabs(*(it - 1) - p) <= tol) return true;
    return false;
  };
  // Forward orbit of x meets the anchor set?
  double p = x;
  for (std::uint64_t j = 0; j <= orbit_len; ++j) {
    if (near_anchor(p)) return true;
    p = sys.map(p);
  }
  // x on a forward image of an anchor?
  for (const double a0 : anchor_pts) {
    double q = a0;
    for (std::uint64_t j = 0; j <= 1000; ++j) {
      if (std::fabs(q - x) <= tol) return true;
      q = sys.map(q);
    }
  }
  return false;
}

}  // namespace distchaos::triangular
