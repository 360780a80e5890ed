#pragma once
// Concrete interval self-maps on [0,1]: tent family, logistic family, and
// general continuous piecewise-linear maps.  Tent evaluation is branchwise
// (s*x left of the peak, s*(1-x) right of it) so dyadic orbits of the full
// tent map stay exact in floating point.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "distchaos/core/orbit.hpp"

namespace distchaos::interval {

class IntervalMap1D {
 public:
  enum class Family { Tent, Logistic, PiecewiseLinear };

  static IntervalMap1D tent(double slope);
  static IntervalMap1D logistic(double lambda);
  // Breakpoints (x_i, y_i) with x ascending from 0 to 1; linear in between.
  static IntervalMap1D piecewise(std::vector<std::pair<double, double>> breakpoints);
  // "tent:<slope>", "logistic:<lambda>", "pl:x0,y0;x1,y1;..."
  static IntervalMap1D parse(const std::string& text);

  double operator()(double x) const;
  double iterate(double x, std::uint64_t k) const;  // f^k(x)

  Family family() const { return family_; }
  double parameter() const { return param_; }
  const std::string& id() const { return id_; }

  core::System1D system() const;

 private:
  Family family_ = Family::Tent;
  double param_ = 2.0;
  std::vector<std::pair<double, double>> breaks_;
  std::string id_;
};

}  // namespace distchaos::interval
