#pragma once

#include <complex>

#include "oscp/jump_law.hpp"

namespace oscp {

struct MomentRates {
  double mean_rate;      // lambda m1 - a  (= -k'(0))
  double variance_rate;  // lambda m2
};

/// One spectrally positive compound Poisson component with drift:
/// xi(t) = sum_{k <= N(t)} J_k - a t, jumps J ~ JumpLaw at intensity lambda.
class Component {
 public:
  Component(double drift, double intensity, JumpLaw jumps);

  double drift() const { return drift_; }
  double intensity() const { return intensity_; }
  const JumpLaw& jumps() const { return jumps_; }

  /// Laplace exponent k(z) = a z + lambda (phi(z) - 1), so that
  /// E e^{-z xi(t)} = e^{t k(z)}. Throws domain_error outside the jump law's
  /// analyticity region (unless lambda = 0, where k is entire).
  Complex laplace_exponent(Complex z) const;
  double laplace_exponent(double z) const { return laplace_exponent(Complex(z)).real(); }

  /// The unique root c(s) > 0 of k(z) = s, s > 0. Bracketed by doubling,
  /// bisected to 1e-13 and Newton-polished.
  double cramer_root(double s) const;

  MomentRates moment_rates() const;

  /// k(z) - s as a ratio of polynomials N/Q (Q = jump-law LST denominator).
  Polynomial exponent_numerator(double s) const;
  const Polynomial& exponent_denominator() const { return jumps_.lst_denominator(); }

 private:
  double drift_;
  double intensity_;
  JumpLaw jumps_;
};

/// Two components switching at level b: component 1 drives the process at or
/// below b, component 2 above b.
struct OscillatingModel {
  Component comp1;
  Component comp2;
  double switch_level;

  OscillatingModel(Component c1, Component c2, double b);
};

}  // namespace oscp
