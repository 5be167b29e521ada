#include "oscp/resolvent.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace oscp {

Resolvent::Resolvent(const Component& comp, double s)
    : comp_(comp), s_(s), num_(comp.exponent_numerator(s)), den_(comp.exponent_denominator()) {
  if (!(s > 0.0)) throw std::invalid_argument("Resolvent: s must be > 0");

  cramer_ = comp_.cramer_root(s);
  poles_ = num_.roots();

  // Replace the root matching c(s) by the bisection/Newton value and check
  // the match; the Cramer root is the unique pole in Re(z) > 0.
  size_t best = 0;
  double best_dist = std::abs(poles_[0] - Complex(cramer_));
  for (size_t j = 1; j < poles_.size(); ++j) {
    const double d = std::abs(poles_[j] - Complex(cramer_));
    if (d < best_dist) {
      best = j;
      best_dist = d;
    }
  }
  if (best_dist > 1e-6 * (1.0 + cramer_)) {
    std::ostringstream msg;
    msg << "Resolvent: polynomial root " << poles_[best] << " does not match Cramer root "
        << cramer_;
    throw std::runtime_error(msg.str());
  }
  poles_[best] = Complex(cramer_);

  // Simple-pole residues of Q/N and per-pole deflations of N.
  const Polynomial dnum = num_.derivative();
  std::vector<ExpMix::Term> terms;
  defl_.reserve(poles_.size());
  for (size_t j = 0; j < poles_.size(); ++j) {
    const Complex res = den_(poles_[j]) / dnum(poles_[j]);
    residues_.push_back(res);
    defl_.push_back(CPolynomial::deflate(num_, poles_[j]));
    terms.push_back({res, poles_[j]});
    if (j == best) defl_cramer_ = defl_.back();
  }
  mix_ = ExpMix(std::move(terms));
}

Complex Resolvent::c_factor(Complex z, double x) const {
  if (x < 0.0) return std::exp(z * x);
  return std::exp(z * x) * (1.0 - exponent_minus_s(z) * weighted_integral0(x, z));
}

}  // namespace oscp
