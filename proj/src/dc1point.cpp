#include "distchaos/symbolic/dc1point.hpp"

#include <stdexcept>

#include "distchaos/core/space.hpp"

namespace distchaos::symbolic {

bool CylinderSet::contains(const SymbolSequence& s) const {
  for (std::uint64_t i = 1; i <= prefix.size(); ++i) {
    if (s.at(i) != prefix[i - 1]) return false;
  }
  return true;
}

bool CylinderSet::contains(const CylinderSet& other) const {
  return other.prefix.size() >= prefix.size() &&
         other.prefix.compare(0, prefix.size(), prefix) == 0;
}

CylinderSet ball_cylinder(const SymbolSequence& x0, double eps) {
  const std::uint64_t m = core::ball_depth(eps);
  return CylinderSet{x0.prefix_word(m)};
}

PrefixDoublingTransform psi_transform(const SymbolSequence& x0, double eps) {
  PrefixDoublingTransform tr;
  tr.n = core::ball_depth(eps);
  tr.eps = eps;
  const std::string head = x0.prefix_word(tr.n);
  tr.word = head + head;
  return tr;
}

ShiftDcCertificate verify_dc_point(const SymbolSequence& x0, double eps,
                                   const ScrambledFamily& family,
                                   std::uint64_t horizon, double delta) {
  if (family.members.size() < 2) {
    throw std::invalid_argument("verify_dc_point: family needs at least two members");
  }
  const PrefixDoublingTransform tr = psi_transform(x0, eps);
  const CylinderSet ball = ball_cylinder(x0, eps);

  ShiftDcCertificate cert;
  cert.x0_id = x0.serialize();
  cert.eps = eps;
  cert.n = tr.n;
  cert.ball_prefix = ball.prefix;

  // Radius consistency: the cylinder of depth n is the ball iff
  // 1/(n+1) < eps and not 1/n < eps, both checked exactly.
  cert.radius_exact = core::recip_lt(cert.n + 1, eps) &&
                      (cert.n == 0 || !core::recip_lt(cert.n, eps));

  std::vector<SymbolSequence> images;
  images.reserve(family.members.size());
  cert.members_in_ball = true;
  cert.members_survive_n_shifts = true;
  cert.shifted_set_is_ball = true;
  for (std::size_t i = 0; i < family.members.size(); ++i) {
    SymbolSequence img = tr.apply(family.members[i]);
    if (!ball.contains(img)) cert.members_in_ball = false;
    // After j <= n shifts the image must still start with x0|_n; after
    // exactly n shifts its leading word must be the ball prefix itself.
    const SymbolSequence after_n = img.shifted(cert.n);
    if (!ball.contains(after_n)) cert.members_survive_n_shifts = false;
    if (after_n.prefix_word(cert.n) != ball.prefix) cert.shifted_set_is_ball = false;
    cert.member_ids.push_back(family.member_id(i));
    images.push_back(std::move(img));
  }

  const std::vector<std::uint64_t> cps = family.designed_checkpoints(horizon, 2 * cert.n);
  const std::vector<double> grid = core::default_t_grid();
  cert.pairs_dc1 = true;
  for (std::size_t i = 0; i < images.size(); ++i) {
    for (std::size_t j = i + 1; j < images.size(); ++j) {
      auto profile = core::psi_profile(images[i], images[j], grid, cps);
      profile.pair_id = family.member_id(i) + " / " + family.member_id(j);
      core::PairClassification c = core::classify_pair(profile, delta);
      if (c.verdict != core::Verdict::DC1) cert.pairs_dc1 = false;
      cert.pair_reports.push_back(std::move(c));
    }
  }
  return cert;
}

}  // namespace distchaos::symbolic
