#include "distchaos/triangular/feigenbaum.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace distchaos::triangular {

namespace {

// Exact image of an interval under a unimodal quadratic map: endpoints, plus
// the peak value if the critical point lies inside.
Band unimodal_image(const interval::IntervalMap1D& f, double lambda, const Band& J) {
  const double a = f(J.lo);
  const double b = f(J.hi);
  Band img{std::min(a, b), std::max(a, b)};
  if (J.lo <= 0.5 && 0.5 <= J.hi) img.hi = std::max(img.hi, lambda * 0.25);
  return img;
}

double hausdorff(const Band& A, const Band& B) {
  return std::max(std::fabs(A.lo - B.lo), std::fabs(A.hi - B.hi));
}

}  // namespace

const Band& DyadicIntervalSystem::band(std::uint64_t level, std::uint64_t k) const {
  if (level >= levels.size()) throw std::out_of_range("band: level out of range");
  if (k >= levels[level].size()) throw std::out_of_range("band: class index out of range");
  return levels[level][k];
}

DyadicIntervalSystem feigenbaum_intervals(double lambda, std::uint64_t max_level,
                                          std::uint64_t transient,
                                          std::uint64_t samples_per_class,
                                          double form2_tolerance) {
  if (max_level == 0 || max_level > 20) {
    throw std::invalid_argument("feigenbaum_intervals: max_level must lie in [1, 20]");
  }
  if (samples_per_class == 0) {
    throw std::invalid_argument("feigenbaum_intervals: samples_per_class must be >= 1");
  }
  DyadicIntervalSystem sys;
  sys.lambda = lambda;
  sys.max_level = max_level;
  sys.transient = transient;
  sys.samples_per_class = samples_per_class;
  sys.map = interval::IntervalMap1D::logistic(lambda);

  const std::uint64_t window = (std::uint64_t{1} << max_level) * samples_per_class;
  const std::uint64_t total = transient + window;
  sys.orbit.resize(static_cast<std::size_t>(total));
  double x = 0.5;
  for (std::uint64_t j = 0; j < total; ++j) {
    sys.orbit[static_cast<std::size_t>(j)] = x;
    if (!(x >= 0.0 && x <= 1.0)) {
      throw std::runtime_error("feigenbaum_intervals: critical orbit escaped [0,1] at index " +
                               std::to_string(j));
    }
    x = sys.map(x);
  }

  // Hulls per level over the shared window.
  sys.levels.resize(static_cast<std::size_t>(max_level) + 1);
  for (std::uint64_t n = 0; n <= max_level; ++n) {
    const std::uint64_t classes = std::uint64_t{1} << n;
    auto& row = sys.levels[static_cast<std::size_t>(n)];
    row.assign(static_cast<std::size_t>(classes),
               Band{std::numeric_limits<double>::infinity(), -std::numeric_limits<double>::infinity()});
    for (std::uint64_t j = transient; j < total; ++j) {
      const std::uint64_t k = j & (classes - 1);
      Band& b = row[static_cast<std::size_t>(k)];
      const double v = sys.orbit[static_cast<std::size_t>(j)];
      b.lo = std::min(b.lo, v);
      b.hi = std::max(b.hi, v);
    }
  }

  // form1: same-level bands pairwise disjoint with strict gaps.
  sys.form1_min_gap = std::numeric_limits<double>::infinity();
  for (std::uint64_t n = 1; n <= max_level; ++n) {
    std::vector<Band> sorted = sys.levels[static_cast<std::size_t>(n)];
    std::sort(sorted.begin(), sorted.end(), [](const Band& a, const Band& b) { return a.lo < b.lo; });
    for (std::size_t i = 0; i + 1 < sorted.size(); ++i) {
      const double gap = sorted[i + 1].lo - sorted[i].hi;
      if (!(gap > 0.0)) {
        throw std::runtime_error("feigenbaum_intervals: bands overlap at level " + std::to_string(n));
      }
      sys.form1_min_gap = std::min(sys.form1_min_gap, gap);
    }
  }

  // form2: f(band k) matches band k+1 (mod 2^n) within tolerance.
  sys.form2_max_defect = 0.0;
  for (std::uint64_t n = 1; n <= max_level; ++n) {
    const std::uint64_t classes = std::uint64_t{1} << n;
    for (std::uint64_t k = 0; k < classes; ++k) {
      const Band img = unimodal_image(sys.map, lambda, sys.band(n, k));
      const double d = hausdorff(img, sys.band(n, (k + 1) & (classes - 1)));
      sys.form2_max_defect = std::max(sys.form2_max_defect, d);
      if (d > form2_tolerance) {
        throw std::runtime_error("feigenbaum_intervals: band cycling defect " + std::to_string(d) +
                                 " exceeds tolerance at level " + std::to_string(n));
      }
    }
  }

  // form3: parent hull equals the hull of its children exactly.
  for (std::uint64_t n = 1; n <= max_level; ++n) {
    const std::uint64_t parent_classes = std::uint64_t{1} << (n - 1);
    for (std::uint64_t k = 0; k < parent_classes; ++k) {
      const Band& parent = sys.band(n - 1, k);
      const Band& c0 = sys.band(n, k);
      const Band& c1 = sys.band(n, k + parent_classes);
      const double lo = std::min(c0.lo, c1.lo);
      const double hi = std::max(c0.hi, c1.hi);
      if (lo != parent.lo || hi != parent.hi) {
        throw std::runtime_error("feigenbaum_intervals: refinement identity broken at level " +
                                 std::to_string(n));
      }
    }
  }

  // form4: maximum width strictly decreasing in the level.
  sys.max_widths.resize(static_cast<std::size_t>(max_level) + 1, 0.0);
  for (std::uint64_t n = 0; n <= max_level; ++n) {
    double mx = 0.0;
    for (const Band& b : sys.levels[static_cast<std::size_t>(n)]) mx = std::max(mx, b.width());
    sys.max_widths[static_cast<std::size_t>(n)] = mx;
    if (n > 0 && !(mx < sys.max_widths[static_cast<std::size_t>(n - 1)])) {
      throw std::runtime_error("feigenbaum_intervals: widths fail to decrease at level " +
                               std::to_string(n));
    }
  }
  return sys;
}

}  // namespace distchaos::triangular
