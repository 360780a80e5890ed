#include "distchaos/triangular/nsequence.hpp"

#include <sstream>
#include <stdexcept>

namespace distchaos::triangular {

namespace {

void validate(const NSequence& seq) {
  const auto& t = seq.terms;
  if (t.empty()) throw std::invalid_argument("level sequence: empty");
  if (t[0] != 1) throw std::invalid_argument("level sequence: must start at n_1 = 1");
  for (std::size_t i = 0; i + 1 < t.size(); ++i) {
    if (!(t[i] < t[i + 1])) throw std::invalid_argument("level sequence: must be strictly increasing");
  }
  if (t.back() >= 120) throw std::invalid_argument("level sequence: terms must stay below 120");
  // Height budget: sum 2^-n_i plus the worst-case tail of any strictly
  // increasing continuation (< 2^-n_D) must stay below 1.  Scaled by 2^n_D:
  //   sum 2^(n_D - n_i) + 1 <= 2^n_D.
  unsigned __int128 total = 0;
  const std::uint64_t nd = t.back();
  for (const std::uint64_t n : t) {
    total += static_cast<unsigned __int128>(1) << (nd - n);
  }
  const unsigned __int128 budget = static_cast<unsigned __int128>(1) << nd;
  if (total + 1 > budget) {
    throw std::invalid_argument("level sequence: height budget sum 2^-n_i reaches 1");
  }
}

}  // namespace

NSequence choose_n_sequence(const std::string& rule, std::size_t count) {
  if (count == 0) throw std::invalid_argument("choose_n_sequence: count must be >= 1");
  NSequence seq;
  if (rule == "2i-1") {
    seq.rule_id = rule;
    for (std::size_t i = 1; i <= count; ++i) seq.terms.push_back(2 * i - 1);
  } else if (rule == "i") {
    // n_i = i spends the whole height budget: sum 2^-i = 1, not < 1.
    throw std::invalid_argument("choose_n_sequence: rule 'i' is inadmissible (height budget is exactly 1)");
  } else {
    seq.rule_id = "list";
    std::istringstream is(rule);
    std::string piece;
    while (std::getline(is, piece, ',')) {
      if (piece.empty()) continue;
      seq.terms.push_back(std::stoull(piece));
    }
  }
  validate(seq);
  return seq;
}

std::uint64_t plateau_index(const NSequence& seq, std::uint64_t n) {
  const auto& t = seq.terms;
  if (n < t[0]) throw std::invalid_argument("plateau_index: level below n_1");
  std::uint64_t idx = 1;
  for (std::size_t i = 1; i < t.size(); ++i) {
    if (t[i] <= n) idx = i + 1; else break;
  }
  return idx;
}

}  // namespace distchaos::triangular
