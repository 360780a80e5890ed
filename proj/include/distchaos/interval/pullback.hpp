#pragma once
// Pulling a symbolic scrambled family back into the interval.  Each family
// member's symbol word (after the prefix-doubling transform toward a target
// itinerary) names a nested-tree node; the node midpoints are interval
// points whose orbits replay the symbolic scrambling for as many steps as
// the word is long.  Their pairwise statistics under the full map establish
// DC1 evidence around the target point, and the chain J_target|_1 over
// J_target|_2 over ... is the shrinking envelope of the construction.

#include <cstdint>
#include <string>
#include <vector>

#include "distchaos/core/stats.hpp"
#include "distchaos/interval/tree.hpp"
#include "distchaos/symbolic/family.hpp"

namespace distchaos::interval {

struct PullbackOptions {
  // Length of each member word: first '1' position + span, capped at
  // all_zero_len when the word has no '1' in the scanned range.  The span
  // keeps dyadic data inside double precision for piecewise-linear maps.
  std::uint64_t span_after_first_one = 48;
  std::uint64_t all_zero_len = 60;
  std::uint64_t first_one_scan = 4096;
  std::uint64_t target_depth = 40;  // depth of the target-word node for x0
  double delta = 0.1;
  std::uint64_t horizon = 10000;
};

struct Dc1PointReport {
  std::string map_id;
  double eps = 0.0;
  std::uint64_t n = 0;            // symbolic ball depth of eps
  double x0 = 0.0;                // realized target point
  double x0_residual = 0.0;       // half-width of the defining node
  std::vector<std::string> words;
  std::vector<double> points;
  std::vector<std::string> member_ids;
  std::vector<core::PairClassification> pair_reports;
  bool pairs_dc1 = false;
  // envelope chain: nodes of the target word's prefixes, depth 1..target_depth
  std::vector<std::pair<std::string, TreeNode>> envelope_chain;
  core::SubsampleReport subsample;

  bool pass() const { return pairs_dc1; }
};

// Target itinerary is the all-zero word (x0 accumulates at the left fixed
// point of the horseshoe).  eps controls the symbolic transform depth; the
// family supplies the scrambled parameter structure.
Dc1PointReport dc1_point_sample(NestedIntervalTree& tree,
                                const symbolic::ScrambledFamily& family,
                                double eps, const PullbackOptions& opt);

}  // namespace distchaos::interval
