#pragma once

#include <complex>
#include <vector>

#include "oscp/inversion.hpp"
#include "oscp/model.hpp"
#include "oscp/resolvent.hpp"

namespace oscp {

/// Evaluator for the two kernels of the oscillating process at a fixed s:
///
///   K_x(u): Laplace transform (in u) equals
///           (k1(z)-s)/(k2(z)-s) * int_0^inf e^{-uz} R1^s(x+u) du,
///           with K_x(u) = R2^s(x+u) for x <= 0;
///   F(u):   Laplace transform equals (k1(z)-s)/((z-c1(s)) (k2(z)-s)).
///
/// Kernel values are materialized by contour inversion of those transforms
/// at abscissa max(c1(s), c2(s)); the transforms themselves are evaluated
/// through exact single-root deflations, so removable singularities (z=c1)
/// and the spurious 0/0 at the roots of k1-s never reach floating point.
/// Finite integrals over kernel values use a fixed 64-point composite Gauss
/// rule on cached node values.
class KernelEvaluator {
 public:
  KernelEvaluator(const OscillatingModel& model, double s, InversionConfig cfg = {});

  double s() const { return s_; }
  double switch_level() const { return b_; }
  double abscissa() const { return abscissa_; }
  const Resolvent& resolvent1() const { return r1_; }
  const Resolvent& resolvent2() const { return r2_; }
  const InversionConfig& config() const { return cfg_; }

  /// Transform of K_x in u (rational continuation off the true poles).
  Complex k_transform(double x, Complex z) const;
  /// Transform of F in u, removable singularity at c1(s) divided out.
  Complex f_transform(Complex z) const;

  /// K_x(u). Short-circuits to R2^s(x+u) for x <= 0 and to the initial value
  /// (a1/a2) R1^s(x) at u = 0; contour inversion otherwise.
  double k_kernel(double x, double u) const;
  /// Inversion path unconditionally (testing hook for the short-circuits).
  double k_kernel_inverted(double x, double u) const;

  /// F(u); u = 0 short-circuits to the initial value a1/a2.
  double f_kernel(double u) const;
  double f_kernel_inverted(double u) const;

  /// Kernel values cached on composite-Gauss nodes over [0, upper].
  struct QuadPack {
    double upper = 0.0;
    double at_upper = 0.0;                 // kernel value at the upper limit
    std::vector<double> nodes, weights;    // quadrature rule (kink-aware)
    std::vector<double> values;            // kernel at nodes
  };
  QuadPack k_pack(double x, double upper) const;
  QuadPack f_pack(double upper) const;

  static double pack_integral(const QuadPack& p);
  static Complex pack_weighted_integral(const QuadPack& p, Complex z);

  /// frak-K functional e^{uz} ( C1^x(z,s) - (k2(z)-s) int_0^u e^{-vz} K_x(v) dv ).
  /// At z = 0 it reduces to 1 + s int_0^x R1 + s int_0^u K_x.
  Complex k_frak(double x, double u, Complex z) const;
  Complex k_frak(const QuadPack& kp, double x, Complex z) const;
  double k_frak0(double x, double u) const;
  double k_frak0(const QuadPack& kp, double x) const;

  /// frak-F functional e^{d2 z} ( (k2(z)-s) F-transform  -  (k2(z)-s) * int )
  /// evaluated as e^{d2 z} ( (k1(z)-s)/(z-c1) - (k2(z)-s) int_0^{d2} e^{-uz} F ),
  /// analytic for Re(z) >= 0 and at z = c2(s). At z = 0 it reduces to
  /// s/c1(s) + s int_0^{d2} F.
  Complex f_frak(const QuadPack& fp, Complex z) const;
  double f_frak0(const QuadPack& fp) const;

 private:
  double s_;
  double b_;
  Resolvent r1_, r2_;
  double abscissa_;
  InversionConfig cfg_;
};

}  // namespace oscp
