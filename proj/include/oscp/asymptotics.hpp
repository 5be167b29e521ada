#pragma once

#include <string>
#include <utility>
#include <vector>

#include "oscp/inversion.hpp"
#include "oscp/model.hpp"

namespace oscp {

/// Parameters of the Brownian scaling limit: when both components have zero
/// mean rate and variance rates sigma_i^2, the space/time-rescaled exit
/// transforms converge to sinh/cosh expressions in s_i = sqrt(2 s)/sigma_i.
struct DiffusionLimitParams {
  double sigma1;
  double sigma2;
  double s;

  DiffusionLimitParams(double sigma1_, double sigma2_, double s_);
  double s1() const;
  double s2() const;
};

/// Limit of the rescaled up-crossing transform of level k with switch at b;
/// piecewise in x (x <= b and x in [b, k]), continuous at x = b.
double limit_cross_up(const DiffusionLimitParams& p, double x, double b, double k);

/// Limit of the rescaled down-passage transform to level r; piecewise in x
/// (x >= b and x in [r, b]).
double limit_passage_down(const DiffusionLimitParams& p, double x, double b, double r);

/// Limit of the rescaled two-sided exit transforms from the unit interval,
/// 0 < x < 1, 0 < b < 1; returns (down, up).
std::pair<double, double> limit_exit_interval(const DiffusionLimitParams& p, double x, double b);

/// Levels for the scaling study, as fractions of the scale B. The switch
/// level of the scaled process is b*B (the model's own switch level is not
/// used by the study).
struct ScalingGeometry {
  double x = 0.3;      // lower-branch evaluation point, in (0, b]
  double x_neg = -0.2; // negative kernel argument (x_neg + u > 0)
  double b = 0.5;      // switch fraction, in (0, 1)
  double k = 1.0;      // upper level for crossing rows, > b
  double r = 0.0;      // lower level for passage rows, <= x
  double u = 0.6;      // kernel second argument, > 0
};

struct ConvergenceRow {
  std::string functional;
  double scale;         // B
  double finite_value;  // rescaled finite-B evaluation
  double limit_value;   // sinh/cosh limit
  double abs_err;
};

/// Evaluates every rescaled functional (resolvent, Cramer root, both kernels,
/// the frak functionals, the C factor, and the one- and two-boundary exit
/// transforms) at each scale B and tabulates it against its limit. Both
/// components must have zero mean rate; B_list must be increasing.
std::vector<ConvergenceRow> convergence_study(const OscillatingModel& model,
                                              const ScalingGeometry& geometry, double s,
                                              const std::vector<double>& B_list,
                                              const InversionConfig& cfg = {});

/// Checks the study's error sequences: beyond the first scale the errors must
/// be nonincreasing within `slack` relative tolerance, and the last scale
/// must beat the first. Returns an empty string on success, else a message
/// naming the violating functional.
std::string convergence_violation(const std::vector<ConvergenceRow>& rows, double slack = 0.10);

}  // namespace oscp
