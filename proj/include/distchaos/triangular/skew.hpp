#pragma once
// Triangular (skew-product) self-map of the unit square:
//   F(x, y) = ( f(x), h(x) * tau(y) )
// with f the base interval map, h the continuous height field, and tau the
// full tent map on the fiber.  Fibers over height-zero points collapse to
// {0}; over a plateau the fiber dynamics is a tent scaled by the plateau
// height.  The envelope of a full fiber segment [0, v] is exact:
//   sup tau([0, v]) = min(2v, 1),  so  v' = h(x) * min(2v, 1).

#include <cstdint>
#include <string>
#include <vector>

#include "distchaos/core/orbit.hpp"
#include "distchaos/triangular/feigenbaum.hpp"
#include "distchaos/triangular/heightfield.hpp"

namespace distchaos::triangular {

struct TriangularMap {
  interval::IntervalMap1D base = interval::IntervalMap1D::logistic(3.5);
  HeightField heights;
  std::string id;

  core::Vec2 operator()(const core::Vec2& p) const;
  core::System2D system() const;
};

TriangularMap make_triangular(const interval::IntervalMap1D& base, HeightField field);

// Point evaluation of the skew product (convenience mirror of operator()).
core::Vec2 eval_triangular(const TriangularMap& m, const core::Vec2& p);

// Envelope trace of the full fiber over a stored base orbit: starting from
// the fiber segment [0, v0] over base point orbit[start], v[t] is the exact
// sup of the fiber segment after t steps:
//   v[t+1] = h(orbit[start + t]) * min(2 v[t], 1).
struct FiberTrace {
  std::uint64_t start = 0;
  double v0 = 1.0;
  std::vector<double> v;  // v[0..steps]
};

FiberTrace fiber_range(const TriangularMap& m, const std::vector<double>& base_orbit,
                       std::uint64_t start, std::uint64_t steps, double v0 = 1.0);

// Tail statistics of an envelope trace: sup / inf over the tail window and
// how often the envelope visits high (>= 0.9) and crushed (<= 2^-5, 2^-8)
// states.  tail_fraction = 1.0 uses the whole trace.
struct FiberTailStats {
  double sup = 0.0;
  double inf = 0.0;
  std::uint64_t count_high = 0;     // v >= 0.9
  std::uint64_t count_below_5 = 0;  // v <= 2^-5
  std::uint64_t count_below_8 = 0;  // v <= 2^-8
  std::uint64_t window_begin = 0;
  std::uint64_t window_size = 0;
};

FiberTailStats lemma3_statistics(const FiberTrace& trace, double tail_fraction = 1.0);

// Does x belong (numerically) to the height-zero accumulation set?  True if
// the forward orbit of x passes within tol of a zero anchor, or if x lies
// within tol of a forward image (up to 1000 steps) of a zero anchor.
bool k_set_test(const DyadicIntervalSystem& sys, const HeightField& field, double x,
                std::uint64_t orbit_len, double tol = 1e-9);

}  // namespace distchaos::triangular
