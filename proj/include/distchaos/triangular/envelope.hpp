#pragma once
// Envelope shrinkage test: the obstruction to DC2 points on the triangular
// map.  A candidate DC point z = (x_dc, 0) with radius eps = 2^-m would need
// a product set A = (level-m band piece) x [0, eps] with A inside F^n(A)
// inside B(z, eps) for some return time n.  The test traces exact fiber
// envelopes over a spread of base samples from the level-m class and shows:
//
//   * first inclusion fails: within every window of 2^m consecutive
//     iterates, some sample's envelope falls strictly below eps (the window's
//     aligned step lands on a deep plateau for at least one sample, because
//     the samples cover every deep residue class), so A is never contained
//     in F^n(A);
//   * second inclusion holds: at the aligned return iterate T = 2^(m+i) the
//     envelopes sit far below eps and the base returns to the same band, so
//     F^T(A') of the surviving set lands inside the ball.
//
// Together: fibers can only lose height at the return scale — the envelope
// cannot be recovered, and no point of the fiber over the deep class is a
// DC2 point at radius eps.

#include <cstdint>
#include <string>
#include <vector>

#include "distchaos/triangular/skew.hpp"

namespace distchaos::triangular {

struct EnvelopeReport {
  std::uint64_t level = 0;       // m
  std::uint64_t base_class = 0;  // k0 (mod 2^m)
  double eps = 0.0;
  std::uint64_t horizon = 0;
  std::uint64_t window_size = 0;  // 2^m iterates per window

  std::uint64_t sample_count = 0;
  std::uint64_t residue_classes_covered = 0;  // distinct classes mod 1024

  struct Witness {
    std::uint64_t window_index = 0;
    std::uint64_t sample_j = 0;  // orbit index of the base sample
    std::uint64_t step = 0;      // iterate t with v_t < eps
    double v = 0.0;
  };
  std::vector<Witness> shrink_witnesses;  // first witness of each window
  bool every_window_has_witness = false;

  // Aligned return data.
  std::uint64_t return_iterate = 0;  // T = 2^(m+i)
  std::uint64_t return_sample_count = 0;
  double x_dc = 0.0;
  double max_return_fiber = 0.0;
  double max_return_base_dist = 0.0;
  bool return_inside_ball = false;

  std::string verdict;
};

// level m >= 1 fixes eps = 2^-m unless eps_override > 0.  base_class selects
// the residue k0 of base samples mod 2^m. return_exponent i sets T = 2^(m+i).
EnvelopeReport envelope_shrinkage_test(const TriangularMap& map,
                                       const DyadicIntervalSystem& sys,
                                       std::uint64_t level, std::uint64_t base_class,
                                       std::uint64_t horizon,
                                       std::uint64_t return_exponent = 2,
                                       double eps_override = 0.0);

}  // namespace distchaos::triangular
