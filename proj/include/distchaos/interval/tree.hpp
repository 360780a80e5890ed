#pragma once
// Nested interval tree above a horseshoe: for each binary word w the node
// J_w is a closed subinterval with J_w in J_{w[0]} and g(J_{w.front()} part)
// ... concretely, with g = f^k restricted to a horseshoe branch,
//   J_b (b = '0','1') are the horseshoe halves, and
//   J_{b.v} = (g restricted to J_b)^{-1}(J_v),
// the minimal closed subinterval of J_b that g maps onto J_v.  Words index
// itineraries: g(J_{b.v}) = J_v, so deeper words pin orbits to longer
// symbolic futures and the intersection over an infinite word is a point
// (or a monotone-shrinking interval) realizing that itinerary.
//
// Preimages are taken by bisection on a monotone branch.  The bisection
// returns a canonical endpoint (the right end of the final one-ulp bracket,
// after exact-hit shortcuts), so shared boundaries between sibling nodes are
// computed identically and siblings have exactly disjoint interiors.

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "distchaos/interval/horseshoe.hpp"
#include "distchaos/interval/maps.hpp"

namespace distchaos::interval {

struct TreeNode {
  double lo = 0.0;
  double hi = 0.0;
  double width() const { return hi - lo; }
};

class NestedIntervalTree {
 public:
  // Builds every node of depth <= full_depth eagerly.  The branch restriction
  // g|_{J_b} must be strictly monotone at the sampled resolution; otherwise
  // construction fails naming the offending node.
  NestedIntervalTree(IntervalMap1D f, Horseshoe h, std::uint64_t full_depth);

  // Node lookup; extends the tree lazily for words deeper than the eager
  // build (memoized suffix recursion).
  const TreeNode& node(const std::string& word);

  // All nodes at a given (eagerly built) depth, in word order.
  std::vector<std::pair<std::string, TreeNode>> level(std::uint64_t depth) const;

  // Maximum node width at an eagerly built depth.
  double max_width_at_depth(std::uint64_t depth) const;

  std::uint64_t full_depth() const { return full_depth_; }
  const Horseshoe& horseshoe() const { return shoe_; }
  const IntervalMap1D& map() const { return f_; }

  // g = f^k evaluated at a point.
  double g(double x) const { return f_.iterate(x, shoe_.k); }

 private:
  TreeNode pullback(char branch, const TreeNode& target);
  const TreeNode& ensure(const std::string& word);

  IntervalMap1D f_;
  Horseshoe shoe_;
  std::uint64_t full_depth_ = 0;
  std::unordered_map<std::string, TreeNode> nodes_;
  bool rising_[2] = {true, false};  // monotonicity of g on J_0, J_1
};

// Representative points for a list of words: the midpoint of each node, with
// the residual half-width recorded as the positional uncertainty.
struct ItinerarySample {
  std::vector<std::string> words;
  std::vector<double> points;
  std::vector<double> residuals;
};

ItinerarySample itinerary_points(NestedIntervalTree& tree, const std::vector<std::string>& words);

// Observed symbolic itinerary of x under g relative to the horseshoe split:
// symbol '0' if g^j(x) lies left of the split point b, '1' otherwise.
std::string numeric_itinerary(const NestedIntervalTree& tree, double x, std::uint64_t len);

}  // namespace distchaos::interval
