#include "distchaos/symbolic/family.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace distchaos::symbolic {

ScrambledFamily ScrambledFamily::build(SchemePtr scheme, std::vector<std::string> params) {
  if (!scheme) throw std::invalid_argument("family: scheme must be non-null");
  if (params.empty()) throw std::invalid_argument("family: need at least one parameter word");
  std::set<std::string> seen;
  for (const auto& p : params) {
    if (!seen.insert(p).second) {
      throw std::invalid_argument("family: duplicate parameter word '" + p + "'");
    }
  }
  ScrambledFamily fam;
  fam.scheme = scheme;
  fam.params = std::move(params);
  fam.members.reserve(fam.params.size());
  for (const auto& p : fam.params) {
    fam.members.push_back(SymbolSequence::from_scheme(scheme, p));
  }
  return fam;
}

std::vector<std::uint64_t> ScrambledFamily::designed_checkpoints(std::uint64_t horizon,
                                                                 std::uint64_t shift) const {
  if (horizon == 0) throw std::invalid_argument("designed_checkpoints: horizon must be >= 1");
  std::set<std::uint64_t> cps;
  cps.insert(1);
  cps.insert(horizon);
  const auto& bounds = scheme->schedule().bounds;
  for (std::size_t k = 0; k < bounds.size(); ++k) {
    if (bounds[k] < 2) continue;
    const std::uint64_t cp = bounds[k] - 1 + shift;
    if (cp <= horizon) cps.insert(cp);
    // midpoint of even segment k+1 = [a_{k+1}, a_{k+2})
    if (k % 2 == 1 && k + 1 < bounds.size()) {
      const std::uint64_t mid = bounds[k] + (bounds[k + 1] - bounds[k]) / 2 + shift;
      if (mid <= horizon) cps.insert(mid);
    }
    if (bounds[k] > horizon) break;
  }
  // midpoint of segment 0 = [1, a_1) is 1 + (a_1 - 1)/2; segment 0 is even
  if (bounds[0] > 2) {
    const std::uint64_t mid0 = 1 + (bounds[0] - 1) / 2 + shift;
    if (mid0 <= horizon) cps.insert(mid0);
  }
  return std::vector<std::uint64_t>(cps.begin(), cps.end());
}

std::string ScrambledFamily::member_id(std::size_t i) const {
  return "family:" + scheme->id() + ":" + params.at(i);
}

ScrambledFamily build_dc1_family(std::size_t count, SchemePtr scheme) {
  if (count < 2) throw std::invalid_argument("build_dc1_family: need at least two members");
  std::size_t width = 1;
  while ((std::size_t{1} << width) < count) ++width;
  std::vector<std::string> params;
  params.reserve(count);
  for (std::size_t v = 0; v < count; ++v) {
    std::string w(width, '0');
    for (std::size_t b = 0; b < width; ++b) {
      if (v & (std::size_t{1} << (width - 1 - b))) w[b] = '1';
    }
    params.push_back(std::move(w));
  }
  return ScrambledFamily::build(std::move(scheme), std::move(params));
}

}  // namespace distchaos::symbolic
