#pragma once
// Binary symbol sequences over {0,1}, 1-indexed, in one of two lazy forms:
//   * eventually periodic: finite preperiod + repeating period, or
//   * scheme tail: finite preperiod + segment-scheme generated tail.
// Both support O(1) shift and O(log) symbol access, so statistics over
// horizons of 10^5+ positions never materialize the sequence.

#include <cstdint>
#include <string>
#include <vector>

#include "distchaos/symbolic/scheme.hpp"

namespace distchaos::symbolic {

class SymbolSequence {
 public:
  // Eventually periodic sequence pre . period period period ...
  static SymbolSequence periodic(std::string pre, std::string period);
  // Scheme-generated sequence (no preperiod).
  static SymbolSequence from_scheme(SchemePtr scheme, std::string param);
  // Parse "pre|period" (pre may be empty: "|01") or "family:<scheme-id>:<param>".
  static SymbolSequence parse(const std::string& text);

  // Symbol at 1-indexed position i ('0' or '1').
  char at(std::uint64_t i) const;

  // The shifted sequence (drop the first symbol).
  SymbolSequence shifted() const;
  // Shift n times.
  SymbolSequence shifted(std::uint64_t n) const;
  // Prepend a finite word (the word's first symbol becomes position 1).
  SymbolSequence with_prefix(const std::string& word) const;

  // First len symbols as a string.
  std::string prefix_word(std::uint64_t len) const;

  bool is_periodic_form() const { return scheme_ == nullptr; }
  std::uint64_t period_length() const { return period_.size(); }
  bool is_scheme_form() const { return scheme_ != nullptr; }
  const SchemePtr& scheme() const { return scheme_; }
  const std::string& param() const { return param_; }
  std::uint64_t scheme_offset() const { return offset_; }
  const std::string& preperiod() const { return pre_; }

  // Round-trippable text form. Periodic: "pre|period" with the phase folded
  // into the period.  Scheme form with no preperiod and no shift applied:
  // "family:<scheme-id>:<param>".  Shifted/prefixed scheme forms append
  // "+<offset>" / prepend "<pre>|" and are for reports only.
  std::string serialize() const;

 private:
  SymbolSequence() = default;

  std::string pre_;
  std::string period_;      // nonempty iff periodic form
  std::size_t phase_ = 0;   // rotation applied to period_
  SchemePtr scheme_;        // non-null iff scheme form
  std::string param_;
  std::uint64_t offset_ = 0;  // symbols consumed from the scheme tail
};

// First 1-indexed position where x and y differ, or 0 if equal.
// Decidable exactly for periodic pairs (scan to max preperiod + lcm of
// periods) and for aligned same-scheme pairs (structural search).  Any other
// mix is scanned to a fixed hard depth (2^22); agreement to that depth is
// reported as equality by convention.
std::uint64_t first_difference(const SymbolSequence& x, const SymbolSequence& y);

// All 1-indexed positions p <= limit with x[p] != y[p], ascending.
std::vector<std::uint64_t> difference_positions(const SymbolSequence& x,
                                                const SymbolSequence& y,
                                                std::uint64_t limit);

// Sequence-space distance d(x,y) = 1/i with i the first difference (0 if
// equal), returned as the nearest double for reporting.  Exact threshold
// comparisons should use core::recip_lt on first_difference instead.
double shift_metric_value(const SymbolSequence& x, const SymbolSequence& y);

// Exact d(x,y) < t.
bool shift_dist_lt(const SymbolSequence& x, const SymbolSequence& y, double t);

}  // namespace distchaos::symbolic
