#pragma once
// Horseshoe search for interval maps: two closed subintervals J1 = [a, b],
// J2 = [b, c] with disjoint interiors such that f^k(J1) and f^k(J2) each
// cover [a, c].  The covering certificate is rigorous by the intermediate
// value theorem: if sampled values of the continuous map f^k inside a
// subinterval reach below a and above c, the true image contains [a, c].
// Existence of such a pair forces topological entropy >= log(2)/k.

#include <cstdint>
#include <optional>
#include <string>

#include "distchaos/interval/maps.hpp"

namespace distchaos::interval {

struct Horseshoe {
  std::uint64_t k = 1;        // iterate f^k exhibits the covering
  double a = 0, b = 0, c = 0; // J1 = [a, b], J2 = [b, c]
  // Sampled extremes of f^k on each half (the certificate data).
  double min1 = 0, max1 = 0, min2 = 0, max2 = 0;
  // min slack among the four covering inequalities; >= 0 means certified.
  double margin = 0;
  std::uint64_t grid = 0;     // sampling resolution used

  std::string describe() const;
};

// Scan k = 1..k_max, sampling f^k on a uniform grid of `resolution` cells,
// and return the first (smallest k, then leftmost J1, widest J2) horseshoe
// found, or nullopt.  Deterministic for fixed inputs.
std::optional<Horseshoe> find_horseshoe(const IntervalMap1D& f, std::uint64_t k_max,
                                        std::uint64_t resolution);

// Re-verify the covering at `factor` times denser sampling.  Denser sampling
// only widens sampled ranges, so a genuine horseshoe must survive.
bool recheck_horseshoe(const IntervalMap1D& f, const Horseshoe& h, std::uint64_t factor);

// Entropy lower bound log(2)/k implied by a two-branch horseshoe.
double entropy_lower_bound(const Horseshoe& h);

}  // namespace distchaos::interval
