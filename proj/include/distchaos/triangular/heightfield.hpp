#pragma once
// Continuous piecewise-linear height field over the base interval.  The
// field is constant ("plateau") on the hull of each level-n class
// 2^(n-1) mod 2^n — the band that splits away from the core chain at level n
// — at height 2^-(i(n)-1) given by the level sequence.  Between the core
// band and the plateau of each level sits a gap containing a periodic point
// of period 2^(n-1); the field is pinned to 0 there and at {0, 1/2, 1}, so
// it vanishes on the accumulation set while staying positive on every
// plateau.
//
// Levels beyond the constructed resolution of the interval system
// ("beyond-resolution" plateaus) take geometrically clipped heights
// 2^-(i(D)-1) * 4^-(n-D): a model for sub-resolution structure that keeps
// deep visits strictly below every resolved height, which only strengthens
// shrinkage conclusions drawn from it.

#include <cstdint>
#include <string>
#include <vector>

#include "distchaos/triangular/feigenbaum.hpp"
#include "distchaos/triangular/nsequence.hpp"

namespace distchaos::triangular {

struct HeightField {
  struct Knot {
    double x = 0.0;
    double h = 0.0;
  };
  struct Plateau {
    std::uint64_t level = 0;
    double height = 0.0;
    double lo = 0.0;
    double hi = 0.0;
    std::uint64_t sample_count = 0;
    bool beyond_resolution = false;
  };
  struct ZeroAnchor {
    double x = 0.0;
    std::uint64_t level = 0;   // 0 for the fixed anchors {0, 1/2, 1}
    bool from_periodic_point = false;
    double residual = 0.0;     // |f^(2^(level-1))(x) - x| at the anchor
  };

  std::vector<Knot> knots;          // ascending x; piecewise linear between
  std::vector<Plateau> plateaus;
  std::vector<ZeroAnchor> anchors;

  double operator()(double x) const;
};

// depth: plateau levels built from resolved bands (must be <= sys.max_level);
// extra_levels: beyond-resolution plateaus appended from deeper orbit classes.
HeightField build_height_field(const DyadicIntervalSystem& sys, const NSequence& seq,
                               std::uint64_t depth, std::uint64_t extra_levels);

}  // namespace distchaos::triangular
