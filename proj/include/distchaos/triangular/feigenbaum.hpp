#pragma once
// Dyadic nested interval system of a logistic map at an accumulation-of-
// period-doubling parameter.  The attractor splits into 2^n bands cycling
// under f; band k at level n is captured as the hull of orbit samples
// x_j = f^j(1/2) with j = k (mod 2^n), taken over one shared sample window
// [transient, transient + 2^max_level * samples_per_class).  Using the same
// window at every level makes the refinement identity exact: the level-(n-1)
// hull is the hull of the union of its two children's samples by definition.
//
// Validated structure ("forms"):
//   form1: the 2^n level-n intervals are pairwise disjoint with strict gaps;
//   form2: f maps band k onto band k+1 (mod 2^n) up to a small Hausdorff
//          defect, measured against the exact unimodal image of the hull;
//   form3: each parent hull equals the hull of its two children exactly;
//   form4: the maximum band width strictly decreases with the level.
// A violation raises a construction error naming the level.

#include <cstdint>
#include <string>
#include <vector>

#include "distchaos/interval/maps.hpp"

namespace distchaos::triangular {

struct Band {
  double lo = 0.0;
  double hi = 0.0;
  double width() const { return hi - lo; }
};

struct DyadicIntervalSystem {
  double lambda = 0.0;
  std::uint64_t max_level = 0;         // N: deepest level built
  std::uint64_t transient = 0;         // B: first sample index used in hulls
  std::uint64_t samples_per_class = 0; // M: window length = 2^N * M
  interval::IntervalMap1D map = interval::IntervalMap1D::logistic(3.5);

  // levels[n][k]: band k at level n (level 0 = whole sampled attractor hull).
  std::vector<std::vector<Band>> levels;
  // Critical orbit x_j = f^j(1/2), j = 0 .. transient + 2^N * M - 1 inclusive;
  // kept whole so height-field and fiber computations reuse exact samples.
  std::vector<double> orbit;

  // Validation artifacts.
  double form1_min_gap = 0.0;   // smallest gap between adjacent same-level bands
  double form2_max_defect = 0.0;
  std::vector<double> max_widths;  // per level 0..N

  std::uint64_t window_begin() const { return transient; }
  std::uint64_t window_end() const { return transient + (std::uint64_t{1} << max_level) * samples_per_class; }

  const Band& band(std::uint64_t level, std::uint64_t k) const;
};

// Build and validate the system.  form2_tolerance bounds the allowed
// Hausdorff defect of the band cycling check.
DyadicIntervalSystem feigenbaum_intervals(double lambda, std::uint64_t max_level,
                                          std::uint64_t transient,
                                          std::uint64_t samples_per_class,
                                          double form2_tolerance = 1e-6);

}  // namespace distchaos::triangular
