#pragma once

#include <complex>
#include <vector>

#include "oscp/exp_mix.hpp"
#include "oscp/model.hpp"
#include "oscp/polynomial.hpp"

namespace oscp {

/// Resolvent R^s of one component: the function on [0, inf) whose Laplace
/// transform in the level variable is 1/(k(z) - s), Re(z) > c(s), with
/// R^s(x) = 0 for x < 0 and R^s(0) = 1/a.
///
/// For the supported jump laws k(z) - s = N(z)/Q(z) is rational, so R^s is
/// evaluated exactly as the partial-fraction mixture sum_j res_j e^{zeta_j x}
/// over the simple roots zeta_j of N. Poles, residues and the single-root
/// deflations of N are computed once per (component, s) and reused by every
/// downstream formula.
class Resolvent {
 public:
  Resolvent(const Component& comp, double s);

  const Component& component() const { return comp_; }
  double s() const { return s_; }
  double cramer_root() const { return cramer_; }
  /// Abscissa of the transform 1/(k(z)-s): the Cramer root c(s).
  double abscissa() const { return cramer_; }

  /// R^s(x); exact partial fractions (0 for x < 0).
  double operator()(double x) const { return x < 0.0 ? 0.0 : mix_(x); }

  /// int_0^x R^s(u) du (0 for x <= 0).
  double integral0(double x) const { return mix_.integral0(x); }

  /// int_0^x e^{-u z} R^s(u) du, exact.
  Complex weighted_integral0(double x, Complex z) const { return mix_.weighted_integral(x, z); }

  /// 1/(k(z) - s) evaluated as Q(z)/N(z): the rational continuation of the
  /// transform, valid anywhere off the roots of N.
  Complex transform(Complex z) const { return den_(z) / num_(z); }

  /// k(z) - s as N(z)/Q(z).
  Complex exponent_minus_s(Complex z) const { return num_(z) / den_(z); }

  /// (k(z) - s)/(z - c(s)), removable singularity divided out exactly.
  Complex cramer_deflated(Complex z) const { return defl_cramer_(z) / den_(z); }

  /// (k(z) - s)/(z - zeta_j) for the j-th pole.
  Complex pole_deflated(size_t j, Complex z) const { return defl_[j](z) / den_(z); }

  /// C^x(z, s) = e^{zx} (1 - (k(z)-s) int_0^x e^{-uz} R^s(u) du) for x >= 0,
  /// and e^{zx} for x < 0. Entire in z for fixed x.
  Complex c_factor(Complex z, double x) const;

  /// sum_j res_j e^{zeta_j shift} / (z - zeta_j); for shift >= 0 equals the
  /// continuation of int_0^inf e^{-uz} R^s(shift + u) du.
  Complex shifted_transform(double shift, Complex z) const {
    return mix_.shifted_laplace(shift, z);
  }

  const std::vector<Complex>& poles() const { return poles_; }
  const std::vector<Complex>& residues() const { return residues_; }
  const ExpMix& mix() const { return mix_; }

 private:
  Component comp_;
  double s_;
  Polynomial num_, den_;  // k(z) - s = num/den
  double cramer_;
  std::vector<Complex> poles_;
  std::vector<Complex> residues_;
  std::vector<CPolynomial> defl_;  // num/(z - zeta_j) per pole
  CPolynomial defl_cramer_;
  ExpMix mix_;
};

}  // namespace oscp
