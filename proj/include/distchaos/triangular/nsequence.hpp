#pragma once
// Admissible level sequences n_1 < n_2 < ... controlling how plateau heights
// thin out with depth.  Admissibility: n_1 = 1, strictly increasing, and the
// total height budget sum_i 2^{-n_i} stays below 1 (checked exactly in
// integer arithmetic, including the worst-case tail of any continuation).

#include <cstdint>
#include <string>
#include <vector>

namespace distchaos::triangular {

struct NSequence {
  std::string rule_id;               // "2i-1" or "list"
  std::vector<std::uint64_t> terms;  // n_1 .. n_D
};

// rule = "2i-1" (n_i = 2i - 1, the canonical choice) or a comma-separated
// explicit list "1,3,5,...".  `count` terms are generated for rule forms.
// The rule "i" (n_i = i) is rejected: its infinite height budget is exactly 1.
NSequence choose_n_sequence(const std::string& rule, std::size_t count = 32);

// The plateau index i(n): the unique i with n_i <= n < n_{i+1}; requires
// n >= n_1.  For n beyond the last stored term the last index is returned.
std::uint64_t plateau_index(const NSequence& seq, std::uint64_t n);

}  // namespace distchaos::triangular
