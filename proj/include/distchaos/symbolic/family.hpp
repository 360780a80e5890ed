#pragma once
// Scrambled families of scheme-generated sequences.  All members share one
// segment scheme and differ only in their parameter words, so any two
// members agree on even segments (forced '0') and on every odd segment whose
// coordinate they share — the structure that makes each pair spend long
// stretches arbitrarily close and long stretches far apart.

#include <cstdint>
#include <string>
#include <vector>

#include "distchaos/symbolic/scheme.hpp"
#include "distchaos/symbolic/sequence.hpp"

namespace distchaos::symbolic {

struct ScrambledFamily {
  SchemePtr scheme;
  std::vector<std::string> params;
  std::vector<SymbolSequence> members;

  // Validates: non-empty, parameters distinct, binary alphabet.
  static ScrambledFamily build(SchemePtr scheme, std::vector<std::string> params);

  // Horizon checkpoints aligned with the schedule: just before each segment
  // boundary (a_k - 1), the midpoint of each even segment, plus {1, horizon}.
  // `shift` moves every schedule-derived checkpoint forward (used when the
  // members carry a prepended word of that length).  Sorted, deduplicated,
  // clipped to [1, horizon].
  std::vector<std::uint64_t> designed_checkpoints(std::uint64_t horizon,
                                                  std::uint64_t shift = 0) const;

  std::string member_id(std::size_t i) const;  // "family:<scheme-id>:<param>"
};

// count members with auto-generated parameter words: the binary words of
// length ceil(log2(count)) in lexicographic order ("0","1" for 2; "00".."11"
// for 4; first `count` words otherwise).
ScrambledFamily build_dc1_family(std::size_t count, SchemePtr scheme);

}  // namespace distchaos::symbolic
