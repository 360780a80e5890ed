#pragma once
// Distributional statistics of orbit pairs.
//
// For a pair (x, y), a threshold t and a horizon n,
//   xi(x, y, t, n) = #{ 0 <= j < n : d(f^j x, f^j y) < t }   (strict <)
// and Psi^n(t) = xi / n.  A profile tabulates Psi^n(t) over a threshold grid
// and a set of horizon checkpoints in a single pass; lower/upper bounds over
// a tail window approximate the liminf/limsup that define distributional
// chaos, and classify_pair turns the bounds into DC1/DC2/DC3 evidence.

#include <cstdint>
#include <string>
#include <vector>

#include "distchaos/core/orbit.hpp"
#include "distchaos/core/space.hpp"
#include "distchaos/symbolic/sequence.hpp"

namespace distchaos::core {

// Default threshold grid {2^-j : j = 0..10}, ascending.
std::vector<double> default_t_grid();

struct DistributionalProfile {
  std::string pair_id;
  SpaceKind space = SpaceKind::Interval1D;
  std::vector<double> t_grid;            // ascending
  std::vector<std::uint64_t> horizons;   // ascending checkpoints
  // counts[h][ti] = xi at horizon horizons[h], threshold t_grid[ti]
  std::vector<std::vector<std::uint64_t>> counts;

  double psi(std::size_t h, std::size_t ti) const {
    return static_cast<double>(counts[h][ti]) / static_cast<double>(horizons[h]);
  }
  std::uint64_t max_horizon() const { return horizons.back(); }
  std::size_t t_index(double t) const;  // exact grid member, throws otherwise
};

struct TailWindow {
  std::uint64_t n_min = 0;
  std::uint64_t n_max = 0;
};

// The default evidence window: the upper half of the checkpoint range.
TailWindow default_tail_window(const DistributionalProfile& p);

struct PsiBounds {
  double t = 0.0;
  double lower = 0.0;  // min Psi^n(t) over checkpoints in the window
  double upper = 0.0;  // max Psi^n(t) over checkpoints in the window
  TailWindow window;
};

PsiBounds psi_bounds(const DistributionalProfile& p, double t, const TailWindow& w);

enum class Verdict { DC1, DC2, DC3, None };

std::string verdict_name(Verdict v);  // "DC1", "DC2", "DC3", "none"

struct WitnessRow {
  double t = 0.0;
  double lower = 0.0;
  double upper = 0.0;
};

struct PairClassification {
  std::string pair_id;
  Verdict verdict = Verdict::None;
  double delta = 0.0;
  std::uint64_t horizon = 0;
  std::vector<WitnessRow> witnesses;  // one row per grid threshold
  bool dc1 = false, dc2 = false, dc3 = false;
  // e.g. "DC1 (evidence at horizon 100000)"
  std::string label() const;
};

// Evidence at a finite horizon, using every checkpoint of the profile:
//   DC1: upper >= 1 - delta at every t, and lower <= delta at some t
//   DC2: upper >= 1 - delta at every t, and upper - lower >= delta at every t
//   DC3: upper - lower >= delta at every t
// Verdict = the strongest satisfied (DC1 > DC2 > DC3 > none).  These are
// finite-evidence predicates, no containment between them is implied.
PairClassification classify_pair(const DistributionalProfile& p, double delta);

// ---- profile construction -------------------------------------------------

// From two precomputed orbit segments of equal length (>= max horizon).
DistributionalProfile psi_profile(const OrbitSegment& x, const OrbitSegment& y,
                                  const std::vector<double>& t_grid,
                                  const std::vector<std::uint64_t>& horizons);

DistributionalProfile psi_profile(const OrbitSegment2D& x, const OrbitSegment2D& y,
                                  const std::vector<double>& t_grid,
                                  const std::vector<std::uint64_t>& horizons);

// For sequence pairs the profile is computed exactly: every comparison
// d(sigma^j x, sigma^j y) < t is resolved by integer arithmetic on the first
// difference position, found by a single scan of the difference set.
DistributionalProfile psi_profile(const symbolic::SymbolSequence& x,
                                  const symbolic::SymbolSequence& y,
                                  const std::vector<double>& t_grid,
                                  const std::vector<std::uint64_t>& horizons);

// Single xi / Psi^n evaluations (thin wrappers over the same machinery).
std::uint64_t xi_count(const OrbitSegment& x, const OrbitSegment& y, double t, std::uint64_t n);
std::uint64_t xi_count(const OrbitSegment2D& x, const OrbitSegment2D& y, double t, std::uint64_t n);
std::uint64_t xi_count(const symbolic::SymbolSequence& x, const symbolic::SymbolSequence& y,
                       double t, std::uint64_t n);
double psi_n(const OrbitSegment& x, const OrbitSegment& y, double t, std::uint64_t n);

// ---- subsampling check ----------------------------------------------------

// Compares close-visit ratios of a pair under f at horizon k*n against the
// same pair under g = f^k at horizon n.  For k = 1 the two ratios are equal
// by construction; for k > 1 they generally differ (subsampling drops
// intermediate visits), and the report records both.
struct SubsampleReport {
  std::uint64_t k = 1;
  double ratio_full = 0.0;      // under f, horizon k*n
  double ratio_subsampled = 0.0;  // under f^k, horizon n
  double difference = 0.0;
};

SubsampleReport subsample_check(const System1D& sys, std::uint64_t k, double x0, double y0,
                                double t, std::uint64_t n);

}  // namespace distchaos::core
