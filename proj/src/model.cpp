#include "oscp/model.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace oscp {

Component::Component(double drift, double intensity, JumpLaw jumps)
    : drift_(drift), intensity_(intensity), jumps_(std::move(jumps)) {
  if (!(drift_ > 0.0)) throw std::invalid_argument("Component: drift must be > 0");
  if (!(intensity_ >= 0.0)) throw std::invalid_argument("Component: intensity must be >= 0");
}

Complex Component::laplace_exponent(Complex z) const {
  if (intensity_ == 0.0) return drift_ * z;
  return drift_ * z + intensity_ * (jumps_.lst(z) - 1.0);
}

double Component::cramer_root(double s) const {
  if (!(s > 0.0)) throw std::invalid_argument("Component::cramer_root: s must be > 0");

  // k is convex with k(0) = 0 and k(z) -> +inf, so the positive root is the
  // unique sign change of k - s past the minimum.
  const double lo0 = 1e-12;
  double hi = 1.0;
  int doublings = 0;
  while (laplace_exponent(hi) <= s) {
    hi *= 2.0;
    if (++doublings > 200) {
      std::ostringstream msg;
      msg << "Component::cramer_root: no bracket for s=" << s << " up to z=" << hi
          << " (k(z)-s=" << laplace_exponent(hi) - s << ")";
      throw std::runtime_error(msg.str());
    }
  }
  double lo = lo0;
  if (laplace_exponent(lo) >= s) {
    std::ostringstream msg;
    msg << "Component::cramer_root: root below bracket floor " << lo0 << " for s=" << s
        << " (residual " << laplace_exponent(lo) - s << ")";
    throw std::runtime_error(msg.str());
  }
  while (hi - lo > 1e-13) {
    const double mid = 0.5 * (lo + hi);
    if (mid == lo || mid == hi) break;
    if (laplace_exponent(mid) < s)
      lo = mid;
    else
      hi = mid;
  }
  double root = 0.5 * (lo + hi);
  for (int it = 0; it < 8; ++it) {
    const double h = std::max(1e-9, 1e-7 * root);
    const double der = (laplace_exponent(root + h) - laplace_exponent(root - h)) / (2.0 * h);
    if (der <= 0.0) break;
    const double step = (laplace_exponent(root) - s) / der;
    const double next = root - step;
    if (next <= lo || next >= hi * 1.5) break;
    root = next;
    if (std::abs(step) < 1e-16 * (1.0 + root)) break;
  }
  return root;
}

MomentRates Component::moment_rates() const {
  return {intensity_ * jumps_.mean() - drift_, intensity_ * jumps_.second_moment()};
}

Polynomial Component::exponent_numerator(double s) const {
  // k(z) - s = [ (a z - lambda - s) Q(z) + lambda P(z) ] / Q(z)
  const Polynomial& P = jumps_.lst_numerator();
  const Polynomial& Q = jumps_.lst_denominator();
  return Polynomial({-intensity_ - s, drift_}) * Q + P.scaled(intensity_);
}

OscillatingModel::OscillatingModel(Component c1, Component c2, double b)
    : comp1(std::move(c1)), comp2(std::move(c2)), switch_level(b) {
  if (!std::isfinite(b)) throw std::invalid_argument("OscillatingModel: switch level must be finite");
}

}  // namespace oscp
