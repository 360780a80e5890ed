#pragma once
// Point spaces and metrics: the 1-d interval, the 2-d square (max metric),
// and the binary shift space whose 1/i metric is compared exactly.

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace distchaos::core {

enum class SpaceKind { Interval1D, Square2D, ShiftBinary };

inline std::string space_name(SpaceKind k) {
  switch (k) {
    case SpaceKind::Interval1D: return "interval-1d";
    case SpaceKind::Square2D: return "square-2d";
    case SpaceKind::ShiftBinary: return "shift-binary";
  }
  return "?";
}

inline std::string metric_name(SpaceKind k) {
  switch (k) {
    case SpaceKind::Interval1D: return "euclidean-1d";
    case SpaceKind::Square2D: return "max-2d";
    case SpaceKind::ShiftBinary: return "shift-1/i";
  }
  return "?";
}

struct Vec2 {
  double x = 0.0;
  double y = 0.0;
};

inline double interval_dist(double a, double b) { return std::fabs(a - b); }

inline double square_dist(const Vec2& a, const Vec2& b) {
  return std::max(std::fabs(a.x - b.x), std::fabs(a.y - b.y));
}

// Exact predicate 1/i < t for an integer i >= 1 and a double t.
//
// Any positive finite double can be written t = M * 2^(e-53) with integer
// M in [2^52, 2^53) obtained from frexp (this also holds for subnormals,
// whose significand shifts left into the same range).  Then
//     1/i < t  <=>  2^(53-e) < M * i,
// an integer comparison that fits unsigned __int128 because
// M * i < 2^53 * 2^64 = 2^117.  When 53-e >= 117 the left side dominates
// every representable product, so the answer is false.
inline bool recip_lt(std::uint64_t i, double t) {
  if (i == 0) throw std::invalid_argument("recip_lt: index must be >= 1");
  if (!(t > 0.0)) return false;          // covers t <= 0 and NaN
  if (std::isinf(t)) return true;
  int e = 0;
  double m2 = std::frexp(t, &e);         // t = m2 * 2^e, m2 in [0.5, 1)
  const auto M = static_cast<unsigned __int128>(std::ldexp(m2, 53));
  const int s = 53 - e;                  // compare 2^s < M * i
  if (s <= 0) return true;               // 2^s <= 1 < M*i always
  if (s >= 117) return false;            // 2^s > any M*i
  const unsigned __int128 lhs = static_cast<unsigned __int128>(1) << s;
  const unsigned __int128 rhs = M * static_cast<unsigned __int128>(i);
  return lhs < rhs;
}

// Exact shift-space distance value 1/i as a double is NOT used for
// comparisons (it would round); recip_lt above is the comparison of record.
// This helper only feeds reports.
inline double recip_value(std::uint64_t i) {
  return 1.0 / static_cast<double>(i);
}

// Least m >= 1 such that agreement on the first m positions forces the
// shift distance below eps; concretely the least m with 1/(m+1) < eps.
// Exact: uses recip_lt.  eps must lie in (0, 1]; values below the
// resolution limit 2^-60 are rejected (no construction here needs them).
inline std::uint64_t ball_depth(double eps) {
  if (!(eps > 0.0) || eps > 1.0)
    throw std::invalid_argument("ball_depth: eps must be in (0, 1]");
  if (eps < 8.673617379884035e-19)  // 2^-60
    throw std::invalid_argument("ball_depth: eps below resolution limit");
  // Smart start near 1/eps, then settle exactly with the exact predicate.
  auto start = static_cast<std::uint64_t>(1.0 / eps);
  std::uint64_t m = (start > 4) ? start - 4 : 1;
  while (!recip_lt(m + 1, eps)) ++m;             // ensure 1/(m+1) < eps
  while (m > 1 && recip_lt(m, eps)) --m;         // ensure minimality
  return m;
}

}  // namespace distchaos::core
