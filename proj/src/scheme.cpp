#include "distchaos/symbolic/scheme.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace distchaos::symbolic {

namespace {

// Largest schedule value we extend to; positions are uint64 so anything past
// 2^62 can never be reached by a lookup.
constexpr std::uint64_t kExtendCap = std::uint64_t{1} << 62;

}  // namespace

std::uint64_t enumerate_coordinate(Enumeration e, std::uint64_t r) {
  if (r == 0) throw std::invalid_argument("enumerate_coordinate: r must be >= 1");
  if (e == Enumeration::Triangular) {
    // Block b covers r in (b(b-1)/2, b(b+1)/2]; coordinate = offset in block.
    auto b = static_cast<std::uint64_t>(std::floor((std::sqrt(8.0 * static_cast<double>(r) + 1.0) - 1.0) / 2.0));
    if (b == 0) b = 1;
    while (b * (b - 1) / 2 >= r) --b;
    while (b * (b + 1) / 2 < r) ++b;
    return r - b * (b - 1) / 2;
  }
  // RoundRobin: block b >= 1 has length b+1 and starts at (b-1)(b+2)/2 + 1,
  // covering coordinates 1..b+1.
  auto b = static_cast<std::uint64_t>(std::floor(std::sqrt(2.0 * static_cast<double>(r))));
  if (b == 0) b = 1;
  while (b > 1 && (b - 1) * (b + 2) / 2 + 1 > r) --b;
  while (b * (b + 3) / 2 + 1 <= r) ++b;  // start of block b+1 is b(b+3)/2 + 1
  return r - ((b - 1) * (b + 2) / 2 + 1) + 1;
}

SegmentSchedule SegmentSchedule::from(std::vector<std::uint64_t> a) {
  if (a.empty()) throw std::invalid_argument("segment schedule: need at least one boundary");
  if (a[0] < 2) throw std::invalid_argument("segment schedule: a_1 must be >= 2");
  for (std::size_t k = 0; k + 1 < a.size(); ++k) {
    // a[k] = a_{k+1}; require a_{k+2} >= (k+2) * a_{k+1}.
    const auto factor = static_cast<std::uint64_t>(k + 2);
    if (a[k] > std::numeric_limits<std::uint64_t>::max() / factor ||
        a[k + 1] < factor * a[k]) {
      throw std::invalid_argument("segment schedule: growth condition a_{k+1} >= (k+1) a_k violated at index " +
                                  std::to_string(k + 2));
    }
  }
  SegmentSchedule s;
  s.given = a.size();
  s.bounds = std::move(a);
  // Extend by the growth rule with equality until values leave range.
  while (s.bounds.back() < kExtendCap) {
    const auto k = static_cast<std::uint64_t>(s.bounds.size());  // extending to a_{k+1}
    const std::uint64_t prev = s.bounds.back();
    if (prev > std::numeric_limits<std::uint64_t>::max() / (k + 1)) break;
    s.bounds.push_back((k + 1) * prev);
  }
  return s;
}

SegmentScheme::SegmentScheme(SegmentSchedule schedule, Enumeration e, std::string id)
    : schedule_(std::move(schedule)), enum_(e), id_(std::move(id)) {}

std::uint64_t SegmentScheme::segment_of(std::uint64_t pos) const {
  if (pos == 0) throw std::invalid_argument("segment_of: positions are 1-indexed");
  const auto& b = schedule_.bounds;
  if (pos < b[0]) return 0;
  // Largest k with b[k-1] <= pos  ->  segment k.
  auto it = std::upper_bound(b.begin(), b.end(), pos);
  return static_cast<std::uint64_t>(it - b.begin());
}

std::uint64_t SegmentScheme::segment_start(std::uint64_t s) const {
  if (s == 0) return 1;
  const auto& b = schedule_.bounds;
  if (s > b.size()) throw std::out_of_range("segment_start: segment beyond schedule range");
  return b[s - 1];
}

std::uint64_t SegmentScheme::segment_end(std::uint64_t s) const {
  const auto& b = schedule_.bounds;
  if (s >= b.size()) throw std::out_of_range("segment_end: segment beyond schedule range");
  return b[s];
}

char SegmentScheme::symbol(std::uint64_t pos, const std::string& param) const {
  const std::uint64_t s = segment_of(pos);
  if (s % 2 == 0) return '0';
  const std::uint64_t r = (s + 1) / 2;  // ordinal among odd segments
  const std::uint64_t c = enumerate_coordinate(enum_, r);
  if (c > param.size()) return '0';
  return param[c - 1];
}

namespace {

SchemePtr make_scheme(std::vector<std::uint64_t> a, Enumeration e, std::string id) {
  return std::make_shared<SegmentScheme>(SegmentSchedule::from(std::move(a)), e, std::move(id));
}

}  // namespace

SchemePtr named_scheme(const std::string& id) {
  if (id == "default") return make_scheme({2, 4, 12, 48, 240}, Enumeration::Triangular, id);
  if (id == "bands") return make_scheme({2, 4, 12, 48, 240, 4900, 101440}, Enumeration::Triangular, id);
  if (id == "deep") return make_scheme({2, 4, 12, 2400, 50400}, Enumeration::Triangular, id);
  if (id == "rr2") return make_scheme({2, 4, 12, 60, 300, 1800}, Enumeration::RoundRobin, id);
  if (id == "rr3") return make_scheme({3, 6, 18, 90, 450, 2700}, Enumeration::RoundRobin, id);
  if (id.rfind("deep", 0) == 0 && id.size() > 4) {
    const std::string digits = id.substr(4);
    if (digits.find_first_not_of("0123456789") == std::string::npos) {
      const std::uint64_t s4 = std::stoull(digits);
      if (s4 < 48) throw std::invalid_argument("named_scheme: deep<S> needs S >= 48");
      return make_scheme({2, 4, 12, s4, 21 * s4}, Enumeration::Triangular, id);
    }
  }
  throw std::invalid_argument("named_scheme: unknown schedule id '" + id + "'");
}

std::vector<std::string> known_scheme_ids() {
  return {"default", "bands", "deep", "rr2", "rr3"};
}

}  // namespace distchaos::symbolic
