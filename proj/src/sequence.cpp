#include "distchaos/symbolic/sequence.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "distchaos/core/space.hpp"

namespace distchaos::symbolic {

namespace {

constexpr std::uint64_t kConventionDepth = std::uint64_t{1} << 22;

void check_word(const std::string& w, const char* what) {
  for (char c : w) {
    if (c != '0' && c != '1') {
      throw std::invalid_argument(std::string(what) + ": symbols must be '0' or '1'");
    }
  }
}

}  // namespace

SymbolSequence SymbolSequence::periodic(std::string pre, std::string period) {
  check_word(pre, "sequence preperiod");
  check_word(period, "sequence period");
  if (period.empty()) throw std::invalid_argument("sequence period must be nonempty");
  SymbolSequence s;
  s.pre_ = std::move(pre);
  s.period_ = std::move(period);
  return s;
}

SymbolSequence SymbolSequence::from_scheme(SchemePtr scheme, std::string param) {
  if (!scheme) throw std::invalid_argument("sequence: scheme must be non-null");
  check_word(param, "sequence parameter");
  SymbolSequence s;
  s.scheme_ = std::move(scheme);
  s.param_ = std::move(param);
  return s;
}

SymbolSequence SymbolSequence::parse(const std::string& text) {
  if (text.rfind("family:", 0) == 0) {
    const auto second = text.find(':', 7);
    if (second == std::string::npos) {
      throw std::invalid_argument("sequence parse: expected family:<scheme-id>:<param>");
    }
    const std::string id = text.substr(7, second - 7);
    const std::string param = text.substr(second + 1);
    check_word(param, "sequence parameter");
    return from_scheme(named_scheme(id), param);
  }
  const auto bar = text.find('|');
  if (bar == std::string::npos) {
    throw std::invalid_argument("sequence parse: expected pre|period or family:<scheme-id>:<param>");
  }
  return periodic(text.substr(0, bar), text.substr(bar + 1));
}

char SymbolSequence::at(std::uint64_t i) const {
  if (i == 0) throw std::invalid_argument("sequence positions are 1-indexed");
  if (i <= pre_.size()) return pre_[i - 1];
  const std::uint64_t j = i - pre_.size();  // 1-indexed into the tail
  if (scheme_) return scheme_->symbol(offset_ + j, param_);
  return period_[(phase_ + j - 1) % period_.size()];
}

SymbolSequence SymbolSequence::shifted() const {
  SymbolSequence s = *this;
  if (!s.pre_.empty()) {
    s.pre_.erase(0, 1);
  } else if (s.scheme_) {
    ++s.offset_;
  } else {
    s.phase_ = (s.phase_ + 1) % s.period_.size();
  }
  return s;
}

SymbolSequence SymbolSequence::shifted(std::uint64_t n) const {
  SymbolSequence s = *this;
  const std::uint64_t from_pre = std::min<std::uint64_t>(n, s.pre_.size());
  s.pre_.erase(0, static_cast<std::size_t>(from_pre));
  const std::uint64_t rest = n - from_pre;
  if (rest > 0) {
    if (s.scheme_) {
      s.offset_ += rest;
    } else {
      s.phase_ = static_cast<std::size_t>((s.phase_ + rest) % s.period_.size());
    }
  }
  return s;
}

SymbolSequence SymbolSequence::with_prefix(const std::string& word) const {
  check_word(word, "sequence prefix");
  SymbolSequence s = *this;
  s.pre_ = word + s.pre_;
  return s;
}

std::string SymbolSequence::prefix_word(std::uint64_t len) const {
  std::string w;
  w.reserve(static_cast<std::size_t>(len));
  for (std::uint64_t i = 1; i <= len; ++i) w.push_back(at(i));
  return w;
}

std::string SymbolSequence::serialize() const {
  if (!scheme_) {
    std::string per = period_.substr(phase_) + period_.substr(0, phase_);
    return pre_ + "|" + per;
  }
  std::string s = "family:" + scheme_->id() + ":" + param_;
  if (offset_ > 0) s += "+" + std::to_string(offset_);
  if (!pre_.empty()) s = pre_ + "|" + s;
  return s;
}

namespace {

// Structural first difference for same-scheme pairs with equal preperiod
// lengths and equal tail offsets: positions can only differ inside the
// preperiods or in odd segments whose parameter coordinate differs.
std::uint64_t structural_first_difference(const SymbolSequence& x, const SymbolSequence& y) {
  const std::uint64_t pre_len = x.preperiod().size();
  for (std::uint64_t i = 1; i <= pre_len; ++i) {
    if (x.at(i) != y.at(i)) return i;
  }
  const auto& scheme = *x.scheme();
  const std::string& px = x.param();
  const std::string& py = y.param();
  const std::size_t width = std::max(px.size(), py.size());
  auto coord = [](const std::string& p, std::uint64_t c) {
    return c <= p.size() ? p[c - 1] : '0';
  };
  bool any_diff = false;
  for (std::uint64_t c = 1; c <= width; ++c) {
    if (coord(px, c) != coord(py, c)) { any_diff = true; break; }
  }
  if (!any_diff) return 0;
  // First odd segment whose coordinate differs.  The enumeration revisits
  // every coordinate infinitely often, so the loop terminates quickly.
  const std::uint64_t offset = x.scheme_offset();
  for (std::uint64_t r = 1;; ++r) {
    const std::uint64_t c = enumerate_coordinate(scheme.enumeration(), r);
    if (c <= width && coord(px, c) != coord(py, c)) {
      const std::uint64_t s = 2 * r - 1;
      const std::uint64_t tail_pos = scheme.segment_start(s);
      if (tail_pos <= offset) continue;  // segment fully consumed by shifts
      return pre_len + (tail_pos - offset);
    }
    if (r > 4 * width * width + 64) {
      throw std::logic_error("structural_first_difference: enumeration failed to revisit a coordinate");
    }
  }
}

std::uint64_t lcm_capped(std::uint64_t a, std::uint64_t b, std::uint64_t cap) {
  const std::uint64_t g = std::gcd(a, b);
  const std::uint64_t q = a / g;
  if (q > cap / b) return cap;
  return std::min(q * b, cap);
}

}  // namespace

std::uint64_t first_difference(const SymbolSequence& x, const SymbolSequence& y) {
  std::uint64_t bound = kConventionDepth;
  if (x.is_periodic_form() && y.is_periodic_form()) {
    // Two eventually periodic sequences that agree through the longer
    // preperiod plus one lcm of the periods are equal.
    bound = std::max(x.preperiod().size(), y.preperiod().size()) +
            lcm_capped(x.period_length(), y.period_length(), kConventionDepth);
  } else if (x.is_scheme_form() && y.is_scheme_form() && x.scheme() == y.scheme() &&
             x.scheme_offset() == y.scheme_offset() &&
             x.preperiod().size() == y.preperiod().size()) {
    return structural_first_difference(x, y);
  }
  for (std::uint64_t i = 1; i <= bound; ++i) {
    if (x.at(i) != y.at(i)) return i;
  }
  return 0;
}

std::vector<std::uint64_t> difference_positions(const SymbolSequence& x,
                                                const SymbolSequence& y,
                                                std::uint64_t limit) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t p = 1; p <= limit; ++p) {
    if (x.at(p) != y.at(p)) out.push_back(p);
  }
  return out;
}

double shift_metric_value(const SymbolSequence& x, const SymbolSequence& y) {
  const std::uint64_t i = first_difference(x, y);
  return i == 0 ? 0.0 : core::recip_value(i);
}

bool shift_dist_lt(const SymbolSequence& x, const SymbolSequence& y, double t) {
  const std::uint64_t i = first_difference(x, y);
  if (i == 0) return t > 0.0;  // d = 0
  return core::recip_lt(i, t);
}

}  // namespace distchaos::symbolic
