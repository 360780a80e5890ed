#pragma once
// Verification that a target sequence x0 is a DC1 point of the shift map:
// exhibit, inside the ball B(x0, eps), a scrambled set whose n-th shift image
// is exactly that ball, where n is the ball's cylinder depth.
//
// The witness construction doubles a prefix: with n = ball_depth(eps) and
// w = x0|_n x0|_n, the map x -> w.x sends any sequence to one that (i) starts
// with x0|_n, hence lies in B(x0, eps) = the cylinder of x0|_n, and (ii) still
// starts with x0|_n after n shifts, hence stays inside the ball for n steps
// and maps onto the full ball at step n.  Prepending a common word shifts all
// difference positions equally, so scrambling statistics survive unchanged
// apart from a checkpoint offset of 2n.

#include <cstdint>
#include <string>
#include <vector>

#include "distchaos/core/stats.hpp"
#include "distchaos/symbolic/family.hpp"
#include "distchaos/symbolic/sequence.hpp"

namespace distchaos::symbolic {

// The cylinder of a finite word: all sequences starting with it.  The ball
// B(x, eps) in the 1/i metric is exactly the cylinder of x|_m with
// m = ball_depth(eps).
struct CylinderSet {
  std::string prefix;
  bool contains(const SymbolSequence& s) const;
  bool contains(const CylinderSet& other) const;  // other subset of this
};

CylinderSet ball_cylinder(const SymbolSequence& x0, double eps);

struct PrefixDoublingTransform {
  std::uint64_t n = 0;   // cylinder depth of the target ball
  double eps = 0.0;
  std::string word;      // x0|_n x0|_n
  SymbolSequence apply(const SymbolSequence& s) const { return s.with_prefix(word); }
};

PrefixDoublingTransform psi_transform(const SymbolSequence& x0, double eps);

struct ShiftDcCertificate {
  std::string x0_id;
  double eps = 0.0;
  std::uint64_t n = 0;
  std::string ball_prefix;

  bool members_in_ball = false;        // transformed members start with x0|_n
  bool members_survive_n_shifts = false;  // still in the ball after n shifts
  bool shifted_set_is_ball = false;    // n-th shift image cylinder == ball
  bool radius_exact = false;           // 1/(n+1) < eps <= 1/n by exact compare
  bool pairs_dc1 = false;              // every transformed pair shows DC1
  std::vector<core::PairClassification> pair_reports;
  std::vector<std::string> member_ids;

  bool pass() const {
    return members_in_ball && members_survive_n_shifts && shifted_set_is_ball &&
           radius_exact && pairs_dc1;
  }
};

// Verify the DC1-point witness for x0 at radius eps using the given family.
// `horizon` bounds the scrambling evidence; checkpoints are the family's
// designed set shifted by the doubled-prefix length.  `delta` is the DC1
// evidence margin.
ShiftDcCertificate verify_dc_point(const SymbolSequence& x0, double eps,
                                   const ScrambledFamily& family,
                                   std::uint64_t horizon, double delta);

}  // namespace distchaos::symbolic
