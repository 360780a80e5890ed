#include "distchaos/interval/maps.hpp"

#include <sstream>
#include <stdexcept>

namespace distchaos::interval {

namespace {

std::string trim_number(double v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

}  // namespace

IntervalMap1D IntervalMap1D::tent(double slope) {
  if (!(slope > 0.0 && slope <= 2.0)) {
    throw std::invalid_argument("tent map: slope must lie in (0, 2]");
  }
  IntervalMap1D m;
  m.family_ = Family::Tent;
  m.param_ = slope;
  m.id_ = "tent:" + trim_number(slope);
  return m;
}

IntervalMap1D IntervalMap1D::logistic(double lambda) {
  if (!(lambda > 0.0 && lambda <= 4.0)) {
    throw std::invalid_argument("logistic map: lambda must lie in (0, 4]");
  }
  IntervalMap1D m;
  m.family_ = Family::Logistic;
  m.param_ = lambda;
  m.id_ = "logistic:" + trim_number(lambda);
  return m;
}

IntervalMap1D IntervalMap1D::piecewise(std::vector<std::pair<double, double>> breakpoints) {
  if (breakpoints.size() < 2) {
    throw std::invalid_argument("piecewise map: need at least two breakpoints");
  }
  if (breakpoints.front().first != 0.0 || breakpoints.back().first != 1.0) {
    throw std::invalid_argument("piecewise map: breakpoints must span [0, 1]");
  }
  for (std::size_t i = 0; i + 1 < breakpoints.size(); ++i) {
    if (!(breakpoints[i].first < breakpoints[i + 1].first)) {
      throw std::invalid_argument("piecewise map: breakpoint abscissae must be ascending");
    }
  }
  for (const auto& [x, y] : breakpoints) {
    if (!(y >= 0.0 && y <= 1.0)) {
      throw std::invalid_argument("piecewise map: values must lie in [0, 1]");
    }
  }
  IntervalMap1D m;
  m.family_ = Family::PiecewiseLinear;
  m.breaks_ = std::move(breakpoints);
  std::ostringstream os;
  os << "pl:";
  for (std::size_t i = 0; i < m.breaks_.size(); ++i) {
    if (i) os << ";";
    os << m.breaks_[i].first << "," << m.breaks_[i].second;
  }
  m.id_ = os.str();
  return m;
}

IntervalMap1D IntervalMap1D::parse(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) throw std::invalid_argument("map parse: expected <family>:<params>");
  const std::string fam = text.substr(0, colon);
  const std::string rest = text.substr(colon + 1);
  if (fam == "tent") return tent(std::stod(rest));
  if (fam == "logistic") return logistic(std::stod(rest));
  if (fam == "pl") {
    std::vector<std::pair<double, double>> pts;
    std::istringstream is(rest);
    std::string piece;
    while (std::getline(is, piece, ';')) {
      const auto comma = piece.find(',');
      if (comma == std::string::npos) throw std::invalid_argument("map parse: bad breakpoint '" + piece + "'");
      pts.emplace_back(std::stod(piece.substr(0, comma)), std::stod(piece.substr(comma + 1)));
    }
    return piecewise(std::move(pts));
  }
  throw std::invalid_argument("map parse: unknown family '" + fam + "'");
}

double IntervalMap1D::operator()(double x) const {
  switch (family_) {
    case Family::Tent:
      return x < 0.5 ? param_ * x : param_ * (1.0 - x);
    case Family::Logistic:
      return param_ * x * (1.0 - x);
    case Family::PiecewiseLinear: {
      // binary search for the containing segment
      std::size_t lo = 0, hi = breaks_.size() - 1;
      while (hi - lo > 1) {
        const std::size_t mid = (lo + hi) / 2;
        if (breaks_[mid].first <= x) lo = mid; else hi = mid;
      }
      const auto& [x0, y0] = breaks_[lo];
      const auto& [x1, y1] = breaks_[hi];
      if (x == x0) return y0;
      if (x == x1) return y1;
      return y0 + (y1 - y0) * ((x - x0) / (x1 - x0));
    }
  }
  return x;  // unreachable
}

double IntervalMap1D::iterate(double x, std::uint64_t k) const {
  for (std::uint64_t i = 0; i < k; ++i) x = (*this)(x);
  return x;
}

core::System1D IntervalMap1D::system() const {
  IntervalMap1D copy = *this;
  return core::System1D{id_, [copy](double x) { return copy(x); }};
}

}  // namespace distchaos::interval
