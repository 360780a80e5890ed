#pragma once
// Orbit segments under interval and square self-maps, with escape checking:
// if iteration leaves the space the orbit constructor reports the first bad
// index instead of silently producing garbage statistics.

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "distchaos/core/space.hpp"

namespace distchaos::core {

struct OrbitEscapeError : std::runtime_error {
  std::uint64_t index;
  explicit OrbitEscapeError(std::uint64_t i, const std::string& system)
      : std::runtime_error("orbit escaped the space at index " + std::to_string(i) +
                           " under " + system),
        index(i) {}
};

struct System1D {
  std::string id;
  std::function<double(double)> f;
};

struct System2D {
  std::string id;
  std::function<Vec2(const Vec2&)> f;
};

struct OrbitSegment {
  std::string system_id;
  std::vector<double> points;  // x, f(x), ..., f^n(x)  (n+1 entries)
};

struct OrbitSegment2D {
  std::string system_id;
  std::vector<Vec2> points;
};

inline OrbitSegment orbit(const System1D& sys, double x0, std::uint64_t n) {
  OrbitSegment seg;
  seg.system_id = sys.id;
  seg.points.reserve(static_cast<std::size_t>(n) + 1);
  double x = x0;
  for (std::uint64_t j = 0; j <= n; ++j) {
    if (!(x >= 0.0 && x <= 1.0)) throw OrbitEscapeError(j, sys.id);
    seg.points.push_back(x);
    if (j < n) x = sys.f(x);
  }
  return seg;
}

inline OrbitSegment2D orbit2(const System2D& sys, const Vec2& p0, std::uint64_t n) {
  OrbitSegment2D seg;
  seg.system_id = sys.id;
  seg.points.reserve(static_cast<std::size_t>(n) + 1);
  Vec2 p = p0;
  for (std::uint64_t j = 0; j <= n; ++j) {
    if (!(p.x >= 0.0 && p.x <= 1.0 && p.y >= 0.0 && p.y <= 1.0)) {
      throw OrbitEscapeError(j, sys.id);
    }
    seg.points.push_back(p);
    if (j < n) p = sys.f(p);
  }
  return seg;
}

}  // namespace distchaos::core
