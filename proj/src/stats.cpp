#include "distchaos/core/stats.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace distchaos::core {

std::vector<double> default_t_grid() {
  std::vector<double> g;
  for (int j = 10; j >= 0; --j) g.push_back(std::ldexp(1.0, -j));
  return g;
}

std::size_t DistributionalProfile::t_index(double t) const {
  for (std::size_t i = 0; i < t_grid.size(); ++i) {
    if (t_grid[i] == t) return i;
  }
  throw std::invalid_argument("profile: threshold not on the stored grid");
}

TailWindow default_tail_window(const DistributionalProfile& p) {
  const std::uint64_t hi = p.max_horizon();
  return TailWindow{hi / 2 + hi % 2, hi};
}

PsiBounds psi_bounds(const DistributionalProfile& p, double t, const TailWindow& w) {
  if (w.n_min > w.n_max) throw std::invalid_argument("psi_bounds: empty window");
  const std::size_t ti = p.t_index(t);
  PsiBounds b;
  b.t = t;
  b.window = w;
  b.lower = 2.0;  // sentinel above any ratio
  b.upper = -1.0;
  bool any = false;
  for (std::size_t h = 0; h < p.horizons.size(); ++h) {
    if (p.horizons[h] < w.n_min || p.horizons[h] > w.n_max) continue;
    const double v = p.psi(h, ti);
    b.lower = std::min(b.lower, v);
    b.upper = std::max(b.upper, v);
    any = true;
  }
  if (!any) throw std::invalid_argument("psi_bounds: no checkpoint lies inside the window");
  return b;
}

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::DC1: return "DC1";
    case Verdict::DC2: return "DC2";
    case Verdict::DC3: return "DC3";
    default: return "none";
  }
}

std::string PairClassification::label() const {
  return verdict_name(verdict) + " (evidence at horizon " + std::to_string(horizon) + ")";
}

PairClassification classify_pair(const DistributionalProfile& p, double delta) {
  if (!(delta > 0.0 && delta < 0.5)) {
    throw std::invalid_argument("classify_pair: delta must lie in (0, 0.5)");
  }
  PairClassification c;
  c.pair_id = p.pair_id;
  c.delta = delta;
  c.horizon = p.max_horizon();

  bool upper_high_everywhere = true;  // upper >= 1 - delta at every t
  bool lower_low_somewhere = false;   // lower <= delta at some t
  bool gap_everywhere = true;         // upper - lower >= delta at every t

  const TailWindow full{1, p.max_horizon()};
  for (double t : p.t_grid) {
    const PsiBounds b = psi_bounds(p, t, full);
    c.witnesses.push_back(WitnessRow{t, b.lower, b.upper});
    if (!(b.upper >= 1.0 - delta)) upper_high_everywhere = false;
    if (b.lower <= delta) lower_low_somewhere = true;
    if (!(b.upper - b.lower >= delta)) gap_everywhere = false;
  }

  c.dc1 = upper_high_everywhere && lower_low_somewhere;
  c.dc2 = upper_high_everywhere && gap_everywhere;
  c.dc3 = gap_everywhere;
  c.verdict = c.dc1 ? Verdict::DC1 : c.dc2 ? Verdict::DC2 : c.dc3 ? Verdict::DC3 : Verdict::None;
  return c;
}

namespace {

void check_profile_inputs(const std::vector<double>& t_grid,
                          const std::vector<std::uint64_t>& horizons) {
  if (t_grid.empty()) throw std::invalid_argument("profile: empty threshold grid");
  if (horizons.empty()) throw std::invalid_argument("profile: empty horizon set");
  for (std::size_t i = 0; i + 1 < t_grid.size(); ++i) {
    if (!(t_grid[i] < t_grid[i + 1])) throw std::invalid_argument("profile: grid must be ascending");
  }
  if (!(t_grid.front() > 0.0)) throw std::invalid_argument("profile: thresholds must be positive");
  for (std::size_t i = 0; i + 1 < horizons.size(); ++i) {
    if (!(horizons[i] < horizons[i + 1])) {
      throw std::invalid_argument("profile: horizons must be strictly ascending");
    }
  }
  if (horizons.front() == 0) throw std::invalid_argument("profile: horizons must be >= 1");
}

template <typename DistAt>
DistributionalProfile profile_from_distances(SpaceKind space, std::uint64_t n_points,
                                             DistAt&& dist_at,
                                             const std::vector<double>& t_grid,
                                             const std::vector<std::uint64_t>& horizons) {
  check_profile_inputs(t_grid, horizons);
  if (horizons.back() > n_points) {
    throw std::invalid_argument("profile: orbit shorter than the largest horizon");
  }
  DistributionalProfile p;
  p.space = space;
  p.t_grid = t_grid;
  p.horizons = horizons;
  std::vector<std::uint64_t> cnt(t_grid.size(), 0);
  std::size_t next_h = 0;
  for (std::uint64_t j = 0; j < horizons.back(); ++j) {
    const double d = dist_at(j);
    // grid ascending: find first t with d < t; all larger thresholds count too
    for (std::size_t ti = 0; ti < t_grid.size(); ++ti) {
      if (d < t_grid[ti]) {
        for (std::size_t k = ti; k < t_grid.size(); ++k) ++cnt[k];
        break;
      }
    }
    while (next_h < horizons.size() && horizons[next_h] == j + 1) {
      p.counts.push_back(cnt);
      ++next_h;
    }
  }
  return p;
}

}  // namespace

DistributionalProfile psi_profile(const OrbitSegment& x, const OrbitSegment& y,
                                  const std::vector<double>& t_grid,
                                  const std::vector<std::uint64_t>& horizons) {
  const std::uint64_t n = std::min(x.points.size(), y.points.size());
  auto p = profile_from_distances(SpaceKind::Interval1D, n,
                                  [&](std::uint64_t j) { return interval_dist(x.points[j], y.points[j]); },
                                  t_grid, horizons);
  p.pair_id = x.system_id;
  return p;
}

DistributionalProfile psi_profile(const OrbitSegment2D& x, const OrbitSegment2D& y,
                                  const std::vector<double>& t_grid,
                                  const std::vector<std::uint64_t>& horizons) {
  const std::uint64_t n = std::min(x.points.size(), y.points.size());
  auto p = profile_from_distances(SpaceKind::Square2D, n,
                                  [&](std::uint64_t j) { return square_dist(x.points[j], y.points[j]); },
                                  t_grid, horizons);
  p.pair_id = x.system_id;
  return p;
}

DistributionalProfile psi_profile(const symbolic::SymbolSequence& x,
                                  const symbolic::SymbolSequence& y,
                                  const std::vector<double>& t_grid,
                                  const std::vector<std::uint64_t>& horizons) {
  check_profile_inputs(t_grid, horizons);
  const std::uint64_t n = horizons.back();
  // d(sigma^j x, sigma^j y) < t  <=>  first difference index i_j > m(t) where
  // m(t) = ball_depth(t) is the largest index with 1/m >= t.  One scan of the
  // difference positions up to n + m(t_min) resolves every comparison exactly.
  std::vector<std::uint64_t> m(t_grid.size());
  for (std::size_t ti = 0; ti < t_grid.size(); ++ti) m[ti] = ball_depth(t_grid[ti]);
  const std::uint64_t lookahead = m[0];  // largest depth needed (t_grid ascending)
  const std::uint64_t limit = n + lookahead;
  const std::vector<std::uint64_t> diffs = symbolic::difference_positions(x, y, limit);

  DistributionalProfile p;
  p.space = SpaceKind::ShiftBinary;
  p.t_grid = t_grid;
  p.horizons = horizons;
  std::vector<std::uint64_t> cnt(t_grid.size(), 0);
  std::size_t next_h = 0;
  std::size_t ptr = 0;
  for (std::uint64_t j = 0; j < n; ++j) {
    while (ptr < diffs.size() && diffs[ptr] <= j) ++ptr;
    // First difference of (sigma^j x, sigma^j y); limit+1-j when none is in
    // range, which exceeds every m(t) on the grid, so it counts as close.
    const std::uint64_t i_j = (ptr < diffs.size()) ? diffs[ptr] - j : limit + 1 - j;
    for (std::size_t ti = 0; ti < t_grid.size(); ++ti) {
      if (i_j > m[ti]) {
        for (std::size_t k = ti; k < t_grid.size(); ++k) ++cnt[k];
        break;
      }
    }
    while (next_h < horizons.size() && horizons[next_h] == j + 1) {
      p.counts.push_back(cnt);
      ++next_h;
    }
  }
  return p;
}

std::uint64_t xi_count(const OrbitSegment& x, const OrbitSegment& y, double t, std::uint64_t n) {
  if (!(t > 0.0)) return 0;
  if (n == 0 || n > std::min(x.points.size(), y.points.size())) {
    throw std::invalid_argument("xi_count: horizon out of range");
  }
  std::uint64_t c = 0;
  for (std::uint64_t j = 0; j < n; ++j) {
    if (interval_dist(x.points[j], y.points[j]) < t) ++c;
  }
  return c;
}

std::uint64_t xi_count(const OrbitSegment2D& x, const OrbitSegment2D& y, double t, std::uint64_t n) {
  if (!(t > 0.0)) return 0;
  if (n == 0 || n > std::min(x.points.size(), y.points.size())) {
    throw std::invalid_argument("xi_count: horizon out of range");
  }
  std::uint64_t c = 0;
  for (std::uint64_t j = 0; j < n; ++j) {
    if (square_dist(x.points[j], y.points[j]) < t) ++c;
  }
  return c;
}

std::uint64_t xi_count(const symbolic::SymbolSequence& x, const symbolic::SymbolSequence& y,
                       double t, std::uint64_t n) {
  if (!(t > 0.0) || n == 0) return 0;
  auto p = psi_profile(x, y, {t}, {n});
  return p.counts[0][0];
}

double psi_n(const OrbitSegment& x, const OrbitSegment& y, double t, std::uint64_t n) {
  return static_cast<double>(xi_count(x, y, t, n)) / static_cast<double>(n);
}

SubsampleReport subsample_check(const System1D& sys, std::uint64_t k, double x0, double y0,
                                double t, std::uint64_t n) {
  if (k == 0 || n == 0) throw std::invalid_argument("subsample_check: k and n must be >= 1");
  SubsampleReport r;
  r.k = k;
  const OrbitSegment ox = orbit(sys, x0, k * n);
  const OrbitSegment oy = orbit(sys, y0, k * n);
  r.ratio_full = static_cast<double>(xi_count(ox, oy, t, k * n)) / static_cast<double>(k * n);
  std::uint64_t sub = 0;
  for (std::uint64_t j = 0; j < n; ++j) {
    if (interval_dist(ox.points[j * k], oy.points[j * k]) < t) ++sub;
  }
  r.ratio_subsampled = static_cast<double>(sub) / static_cast<double>(n);
  r.difference = std::fabs(r.ratio_full - r.ratio_subsampled);
  return r;
}

}  // namespace distchaos::core
