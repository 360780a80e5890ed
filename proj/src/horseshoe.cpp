#include "distchaos/interval/horseshoe.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace distchaos::interval {

namespace {

// Static range-min/range-max structure over a fixed array.
class RangeExtrema {
 public:
  explicit RangeExtrema(const std::vector<double>& v) {
    const std::size_t n = v.size();
    logs_.resize(n + 1, 0);
    for (std::size_t i = 2; i <= n; ++i) logs_[i] = logs_[i / 2] + 1;
    const std::size_t levels = static_cast<std::size_t>(logs_[n]) + 1;
    mins_.assign(levels, v);
    maxs_.assign(levels, v);
    for (std::size_t l = 1; l < levels; ++l) {
      const std::size_t span = std::size_t{1} << l;
      for (std::size_t i = 0; i + span <= n; ++i) {
        mins_[l][i] = std::min(mins_[l - 1][i], mins_[l - 1][i + span / 2]);
        maxs_[l][i] = std::max(maxs_[l - 1][i], maxs_[l - 1][i + span / 2]);
      }
    }
  }
  // closed index range [i, j]
  double min(std::size_t i, std::size_t j) const {
    const std::size_t l = logs_[j - i + 1];
    return std::min(mins_[l][i], mins_[l][j + 1 - (std::size_t{1} << l)]);
  }
  double max(std::size_t i, std::size_t j) const {
    const std::size_t l = logs_[j - i + 1];
    return std::max(maxs_[l][i], maxs_[l][j + 1 - (std::size_t{1} << l)]);
  }

 private:
  std::vector<int> logs_;
  std::vector<std::vector<double>> mins_, maxs_;
};

}  // namespace

std::string Horseshoe::describe() const {
  std::ostringstream os;
  os << "k=" << k << " J1=[" << a << ", " << b << "] J2=[" << b << ", " << c
     << "] margin=" << margin << " grid=" << grid;
  return os.str();
}

std::optional<Horseshoe> find_horseshoe(const IntervalMap1D& f, std::uint64_t k_max,
                                        std::uint64_t resolution) {
  if (k_max == 0 || resolution < 4) {
    throw std::invalid_argument("find_horseshoe: need k_max >= 1 and resolution >= 4");
  }
  const std::size_t n = static_cast<std::size_t>(resolution);
  std::vector<double> x(n + 1), v(n + 1);
  for (std::size_t i = 0; i <= n; ++i) {
    x[i] = static_cast<double>(i) / static_cast<double>(n);
    v[i] = x[i];
  }
  for (std::uint64_t k = 1; k <= k_max; ++k) {
    for (std::size_t i = 0; i <= n; ++i) v[i] = f(v[i]);  // v = f^k on the grid
    RangeExtrema ext(v);
    for (std::size_t ia = 0; ia + 2 <= n; ++ia) {
      const double a = x[ia];
      for (std::size_t ic = n; ic >= ia + 2; --ic) {
        const double c = x[ic];
        // Least split with [x_ia, x_ib] covering [a, c]: coverage of an
        // expanding range is monotone, so binary search works.
        std::size_t lo = ia + 1, hi = ic - 1, b1 = 0;
        bool found1 = false;
        while (lo <= hi) {
          const std::size_t mid = (lo + hi) / 2;
          if (ext.min(ia, mid) <= a && ext.max(ia, mid) >= c) {
            found1 = true;
            b1 = mid;
            if (mid == lo) break;
            hi = mid - 1;
          } else {
            lo = mid + 1;
          }
        }
        if (!found1) continue;
        // Greatest split with [x_ib, x_ic] covering [a, c].
        lo = ia + 1; hi = ic - 1;
        std::size_t b2 = 0;
        bool found2 = false;
        while (lo <= hi) {
          const std::size_t mid = (lo + hi) / 2;
          if (ext.min(mid, ic) <= a && ext.max(mid, ic) >= c) {
            found2 = true;
            b2 = mid;
            if (mid == hi) break;
            lo = mid + 1;
          } else {
            if (mid == lo) break;
            hi = mid - 1;
          }
        }
        if (!found2 || b1 > b2) continue;
        Horseshoe h;
        h.k = k;
        h.a = a;
        h.b = x[b1];
        h.c = c;
        h.grid = resolution;
        h.min1 = ext.min(ia, b1);
        h.max1 = ext.max(ia, b1);
        h.min2 = ext.min(b1, ic);
        h.max2 = ext.max(b1, ic);
        h.margin = std::min(std::min(a - h.min1, h.max1 - c),
                            std::min(a - h.min2, h.max2 - c));
        return h;
      }
    }
  }
  return std::nullopt;
}

bool recheck_horseshoe(const IntervalMap1D& f, const Horseshoe& h, std::uint64_t factor) {
  if (factor == 0) throw std::invalid_argument("recheck_horseshoe: factor must be >= 1");
  const std::uint64_t n = h.grid * factor;
  auto covers = [&](double lo, double hi) {
    double mn = 1e300, mx = -1e300;
    for (std::uint64_t i = 0; i <= n; ++i) {
      const double s = static_cast<double>(i) / static_cast<double>(n);
      double y = lo + (hi - lo) * s;
      for (std::uint64_t j = 0; j < h.k; ++j) y = f(y);
      mn = std::min(mn, y);
      mx = std::max(mx, y);
    }
    return mn <= h.a && mx >= h.c;
  };
  return covers(h.a, h.b) && covers(h.b, h.c);
}

double entropy_lower_bound(const Horseshoe& h) {
  if (h.k == 0) throw std::invalid_argument("entropy_lower_bound: invalid horseshoe");
  return std::log(2.0) / static_cast<double>(h.k);
}

}  // namespace distchaos::interval
