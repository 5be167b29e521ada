#pragma once

#include <complex>

#include "oscp/kernels.hpp"
#include "oscp/model.hpp"
#include "oscp/resolvent.hpp"

namespace oscp {

struct TwoSidedExit {
  double down;  // E[e^{-s chi}; exit below]
  Complex up;   // E[e^{-s chi - z T}; exit above]
};

struct PrCheck {
  Complex lhs;
  Complex rhs;
  double abs_err;
};

// --- auxiliary (single-component) functionals ------------------------------

/// E e^{-s tau^-(x)} = e^{-x c(s)}: continuous first passage below level -x.
double passage_down_lt(const Component& comp, double x, double s);

/// E[e^{-s tau^+(x) - z T^+(x)}]: joint transform of the first up-crossing of
/// level x and its overshoot.
Complex cross_up_lt(const Resolvent& res, double x, Complex z);
Complex cross_up_lt(const Component& comp, double x, Complex z, double s);

/// Two-sided exit of x + xi(t) from [0, d]: (down, up) transforms.
TwoSidedExit exit_interval_lt(const Resolvent& res, double x, double d, Complex z);
TwoSidedExit exit_interval_lt(const Component& comp, double x, double d, Complex z, double s);

// --- oscillating-process functionals ---------------------------------------

/// Exit transforms of the process switching at b. Builds the kernel machinery
/// once per (model, s); reuse one instance across a geometry grid.
class OscFunctionals {
 public:
  OscFunctionals(const OscillatingModel& model, double s, InversionConfig cfg = {});

  const KernelEvaluator& kernels() const { return kq_; }
  double switch_level() const { return kq_.switch_level(); }
  double s() const { return kq_.s(); }

  /// First passage below level r (requires r <= min(x, b)).
  double passage_down(double x, double r) const;

  /// Joint transform of the first crossing of level k and the overshoot
  /// (requires k >= max(x, b) and s >= 1e-6; smaller s is served by the
  /// diffusion-limit formulas).
  Complex cross_up(double x, double k, Complex z) const;

  /// Two-sided exit from [0, B] (requires x, b in [0, B]).
  TwoSidedExit exit_interval(double x, double B, Complex z) const;

 private:
  KernelEvaluator kq_;
};

double osc_passage_down_lt(const OscillatingModel& model, double x, double r, double s);
Complex osc_cross_up_lt(const OscillatingModel& model, double x, double k, Complex z, double s);
TwoSidedExit osc_exit_interval_lt(const OscillatingModel& model, double x, double B, Complex z,
                                  double s);

/// Checks the transform-in-the-level identity
///   int_0^inf e^{-px} E[e^{-s tau^+(x) - z T^+(x)}] dx
///     = (1 - [(p-c)/(k(p)-s)] [(k(z)-s)/(z-c)]) / (p - z)
/// by adaptive quadrature of the left side against the closed-form right
/// side. Requires p > c(s), p != z, and a tail bound e^{-p x_max}/p <= 1e-10.
PrCheck verify_pecherskii_rogozin(const Component& comp, Complex z, double s, double p,
                                  double x_max);

}  // namespace oscp
