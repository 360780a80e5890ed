#pragma once
// Segment schemes: the machinery that generates binary sequences segment by
// segment from a parameter word.  A schedule fixes segment boundaries
// a_1 < a_2 < ... (positions are 1-indexed; segment s occupies [a_s, a_{s+1})
// with a_0 = 1).  Even-numbered segments are all '0' and shared by every
// member; the r-th odd segment is the constant symbol given by parameter
// coordinate e(r), where e is one of two enumerations that revisit every
// coordinate infinitely often.

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace distchaos::symbolic {

enum class Enumeration { Triangular, RoundRobin };

// Coordinate enumerations.
//   Triangular: 1; 1,2; 1,2,3; ...        e(1)=1, e(2)=1, e(3)=2, e(4)=1, ...
//   RoundRobin: 1,2; 1,2,3; 1,2,3,4; ...  e(1)=1, e(2)=2, e(3)=1, e(4)=2, e(5)=3, ...
std::uint64_t enumerate_coordinate(Enumeration e, std::uint64_t r);

struct SegmentSchedule {
  // bounds[i] = a_{i+1}; user-supplied prefix extended by the growth rule
  // a_{k+1} = (k+1) * a_k until the values leave the uint64 range.
  std::vector<std::uint64_t> bounds;
  std::size_t given = 0;  // how many entries were supplied (not rule-derived)

  // Validates a_1 >= 2 and a_{k+1} >= (k+1) * a_k, then extends by the rule.
  static SegmentSchedule from(std::vector<std::uint64_t> a);
};

class SegmentScheme {
 public:
  SegmentScheme(SegmentSchedule schedule, Enumeration e, std::string id);

  // Symbol at 1-indexed position pos for the given parameter word.
  // Parameter coordinates beyond the stored word are taken to be '0'
  // (parameters are finite prefixes of an infinite word padded with zeros).
  char symbol(std::uint64_t pos, const std::string& param) const;

  // Segment index s with pos in [a_s, a_{s+1}), a_0 = 1.
  std::uint64_t segment_of(std::uint64_t pos) const;

  const SegmentSchedule& schedule() const { return schedule_; }
  Enumeration enumeration() const { return enum_; }
  const std::string& id() const { return id_; }

  // Start position a_s of segment s (s >= 0; a_0 = 1).
  std::uint64_t segment_start(std::uint64_t s) const;
  // One-past-the-end position a_{s+1} of segment s.
  std::uint64_t segment_end(std::uint64_t s) const;

 private:
  SegmentSchedule schedule_;
  Enumeration enum_;
  std::string id_;
};

using SchemePtr = std::shared_ptr<const SegmentScheme>;

// Named scheme registry used by serialization (`family:<id>:<param>`) and the
// command line.  Known ids:
//   default  : [2,4,12,48,240,...] growth rule, triangular enumeration
//   bands    : [2,4,12,48,240,4900,101440] + rule, triangular
//   deep     : [2,4,12,2400,50400] + rule, triangular
//   deep<S>  : [2,4,12,S,21*S] + rule, triangular (S >= 48)
//   rr2      : [2,4,12,60,300,1800] + rule, round-robin
//   rr3      : [3,6,18,90,450,2700] + rule, round-robin
SchemePtr named_scheme(const std::string& id);
std::vector<std::string> known_scheme_ids();

}  // namespace distchaos::symbolic
