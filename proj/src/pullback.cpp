#include "distchaos/interval/pullback.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "distchaos/symbolic/dc1point.hpp"

namespace distchaos::interval {

namespace {

std::string member_word(const symbolic::SymbolSequence& transformed,
                        const PullbackOptions& opt) {
  std::uint64_t first_one = 0;
  for (std::uint64_t i = 1; i <= opt.first_one_scan; ++i) {
    if (transformed.at(i) == '1') { first_one = i; break; }
  }
  const std::uint64_t len = (first_one == 0)
                                ? opt.all_zero_len
                                : first_one + opt.span_after_first_one;
  return transformed.prefix_word(len);
}

}  // namespace

Dc1PointReport dc1_point_sample(NestedIntervalTree& tree,
                                const symbolic::ScrambledFamily& family,
                                double eps, const PullbackOptions& opt) {
  if (family.members.size() < 2) {
    throw std::invalid_argument("dc1_point_sample: family needs at least two members");
  }
  Dc1PointReport rep;
  rep.map_id = tree.map().id();
  rep.eps = eps;

  // Target: the all-zero itinerary.  x0 is the midpoint of its depth-D node.
  const symbolic::SymbolSequence target = symbolic::SymbolSequence::periodic("", "0");
  const auto tr = symbolic::psi_transform(target, eps);
  rep.n = tr.n;

  const std::string target_word(static_cast<std::size_t>(opt.target_depth), '0');
  const TreeNode& tnode = tree.node(target_word);
  rep.x0 = 0.5 * (tnode.lo + tnode.hi);
  rep.x0_residual = 0.5 * tnode.width();
  for (std::uint64_t d = 1; d <= opt.target_depth; ++d) {
    const std::string w(static_cast<std::size_t>(d), '0');
    rep.envelope_chain.emplace_back(w, tree.node(w));
  }

  // Member words and points.
  std::vector<std::uint64_t> word_lens;
  for (std::size_t i = 0; i < family.members.size(); ++i) {
    const symbolic::SymbolSequence img = tr.apply(family.members[i]);
    std::string w = member_word(img, opt);
    const TreeNode& nd = tree.node(w);
    rep.points.push_back(0.5 * (nd.lo + nd.hi));
    word_lens.push_back(w.size());
    rep.words.push_back(std::move(w));
    rep.member_ids.push_back(family.member_id(i));
  }

  // Checkpoints: early steps, around each pair's first symbolic difference,
  // just past each member's word end (collapse region), and decades up to
  // the horizon.
  std::set<std::uint64_t> cps = {1, 2, 3, 4, 10, 100, 1000, opt.horizon};
  for (std::size_t i = 0; i < rep.words.size(); ++i) {
    for (const std::uint64_t off : {std::uint64_t{2}, std::uint64_t{4}, std::uint64_t{14}}) {
      const std::uint64_t cp = word_lens[i] + off;
      if (cp <= opt.horizon) cps.insert(cp);
    }
    for (std::size_t j = i + 1; j < rep.words.size(); ++j) {
      const std::size_t common = std::min(rep.words[i].size(), rep.words[j].size());
      std::uint64_t fd = 0;
      for (std::size_t p = 0; p < common; ++p) {
        if (rep.words[i][p] != rep.words[j][p]) { fd = p + 1; break; }
      }
      if (fd == 0) continue;
      for (const std::int64_t off : {-1, 0, 1}) {
        const std::int64_t cp = static_cast<std::int64_t>(fd) + off;
        if (cp >= 1 && cp <= static_cast<std::int64_t>(opt.horizon)) {
          cps.insert(static_cast<std::uint64_t>(cp));
        }
      }
    }
  }
  const std::vector<std::uint64_t> horizons(cps.begin(), cps.end());

  // Orbits under the full map and pairwise classification.
  const core::System1D sys = tree.map().system();
  std::vector<core::OrbitSegment> orbits;
  orbits.reserve(rep.points.size());
  for (const double p : rep.points) orbits.push_back(core::orbit(sys, p, opt.horizon));

  const std::vector<double> grid = core::default_t_grid();
  rep.pairs_dc1 = true;
  for (std::size_t i = 0; i < orbits.size(); ++i) {
    for (std::size_t j = i + 1; j < orbits.size(); ++j) {
      auto profile = core::psi_profile(orbits[i], orbits[j], grid, horizons);
      profile.pair_id = rep.member_ids[i] + " / " + rep.member_ids[j];
      core::PairClassification c = core::classify_pair(profile, opt.delta);
      if (c.verdict != core::Verdict::DC1) rep.pairs_dc1 = false;
      rep.pair_reports.push_back(std::move(c));
    }
  }

  // Subsampling sanity: with the horseshoe's own iterate count k = 1 the
  // full and subsampled ratios agree exactly; report at k from the tree.
  rep.subsample = core::subsample_check(sys, tree.horseshoe().k, rep.points[0], rep.points[1],
                                        0.5, std::min<std::uint64_t>(opt.horizon, 2000));
  return rep;
}

}  // namespace distchaos::interval
