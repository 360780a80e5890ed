#include "distchaos/interval/tree.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace distchaos::interval {

namespace {

// Solve g(p) = target for p in [lo, hi], where g is strictly monotone on the
// bracket and g(lo), g(hi) straddle the target.  Returns a canonical point:
// an exact hit if bisection lands on one, otherwise the right end of the
// final one-ulp bracket.  Identical inputs give identical outputs, so shared
// targets produce shared endpoints.
template <typename G>
double bisect_monotone(G&& g, double lo, double hi, double target, bool rising) {
  if (g(lo) == target) return lo;
  if (g(hi) == target) return hi;
  while (true) {
    const double mid = 0.5 * (lo + hi);
    if (mid == lo || mid == hi) break;
    const double v = g(mid);
    if (v == target) return mid;
    const bool below = rising ? (v < target) : (v > target);
    if (below) lo = mid; else hi = mid;
  }
  return hi;
}

}  // namespace

NestedIntervalTree::NestedIntervalTree(IntervalMap1D f, Horseshoe h, std::uint64_t full_depth)
    : f_(std::move(f)), shoe_(h), full_depth_(std::max<std::uint64_t>(full_depth, 1)) {
  const TreeNode left{h.a, h.b};
  const TreeNode right{h.b, h.c};
  nodes_.emplace("0", left);
  nodes_.emplace("1", right);
  // Determine branch orientation and sanity-check monotonicity at the
  // horseshoe's own sampling resolution.
  const TreeNode* branches[2] = {&left, &right};
  for (int b = 0; b < 2; ++b) {
    const TreeNode& J = *branches[b];
    const std::uint64_t steps = std::max<std::uint64_t>(h.grid, 16);
    double prev = g(J.lo);
    const bool rise = g(J.hi) > g(J.lo);
    for (std::uint64_t i = 1; i <= steps; ++i) {
      const double x = J.lo + (J.hi - J.lo) * static_cast<double>(i) / static_cast<double>(steps);
      const double v = g(x);
      if (rise ? v < prev : v > prev) {
        throw std::runtime_error(std::string("interval tree: branch J_") +
                                 (b ? "1" : "0") + " is not monotone at sampled resolution");
      }
      prev = v;
    }
    rising_[b] = rise;
  }
  // Eager build level by level: level d+1 nodes are pullbacks of level d.
  std::vector<std::string> frontier = {"0", "1"};
  for (std::uint64_t d = 1; d < full_depth_; ++d) {
    std::vector<std::string> next;
    next.reserve(frontier.size() * 2);
    for (const char b : {'0', '1'}) {
      for (const auto& w : frontier) {
        const std::string word = std::string(1, b) + w;
        nodes_.emplace(word, pullback(b, nodes_.at(w)));
        next.push_back(word);
      }
    }
    frontier = std::move(next);
  }
}

TreeNode NestedIntervalTree::pullback(char branch, const TreeNode& target) {
  const int bi = branch - '0';
  const TreeNode& J = nodes_.at(std::string(1, branch));
  auto gg = [this](double x) { return g(x); };
  const bool rise = rising_[bi];
  double p, q;
  if (rise) {
    p = bisect_monotone(gg, J.lo, J.hi, target.lo, true);
    q = bisect_monotone(gg, J.lo, J.hi, target.hi, true);
  } else {
    // falling branch: the left endpoint maps to the target's right end
    p = bisect_monotone(gg, J.lo, J.hi, target.hi, false);
    q = bisect_monotone(gg, J.lo, J.hi, target.lo, false);
  }
  if (p > q) std::swap(p, q);
  return TreeNode{p, q};
}

const TreeNode& NestedIntervalTree::ensure(const std::string& word) {
  auto it = nodes_.find(word);
  if (it != nodes_.end()) return it->second;
  if (word.empty()) throw std::invalid_argument("interval tree: empty word");
  for (char c : word) {
    if (c != '0' && c != '1') throw std::invalid_argument("interval tree: word symbols must be 0/1");
  }
  const TreeNode& suffix = ensure(word.substr(1));
  auto [pos, inserted] = nodes_.emplace(word, pullback(word[0], suffix));
  (void)inserted;
  return pos->second;
}

const TreeNode& NestedIntervalTree::node(const std::string& word) { return ensure(word); }

std::vector<std::pair<std::string, TreeNode>> NestedIntervalTree::level(std::uint64_t depth) const {
  if (depth == 0 || depth > full_depth_) {
    throw std::invalid_argument("interval tree: level outside the eagerly built range");
  }
  std::vector<std::pair<std::string, TreeNode>> out;
  out.reserve(std::size_t{1} << depth);
  for (std::uint64_t v = 0; v < (std::uint64_t{1} << depth); ++v) {
    std::string w(depth, '0');
    for (std::uint64_t b = 0; b < depth; ++b) {
      if (v & (std::uint64_t{1} << (depth - 1 - b))) w[b] = '1';
    }
    out.emplace_back(w, nodes_.at(w));
  }
  return out;
}

double NestedIntervalTree::max_width_at_depth(std::uint64_t depth) const {
  double mx = 0.0;
  for (const auto& [w, nd] : level(depth)) mx = std::max(mx, nd.width());
  return mx;
}

ItinerarySample itinerary_points(NestedIntervalTree& tree, const std::vector<std::string>& words) {
  ItinerarySample s;
  s.words = words;
  for (const auto& w : words) {
    const TreeNode& nd = tree.node(w);
    s.points.push_back(0.5 * (nd.lo + nd.hi));
    s.residuals.push_back(0.5 * nd.width());
  }
  return s;
}

std::string numeric_itinerary(const NestedIntervalTree& tree, double x, std::uint64_t len) {
  std::string out;
  out.reserve(static_cast<std::size_t>(len));
  const double split = tree.horseshoe().b;
  for (std::uint64_t i = 0; i < len; ++i) {
    out.push_back(x < split ? '0' : '1');
    x = tree.g(x);
  }
  return out;
}

}  // namespace distchaos::interval
