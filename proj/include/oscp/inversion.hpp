#pragma once

#include <complex>
#include <functional>
#include <vector>

namespace oscp {

using Complex = std::complex<double>;
using TransformFn = std::function<Complex(Complex)>;

enum class InversionMethod { FixedTalbot, EulerSummation };

struct InversionConfig {
  InversionMethod method = InversionMethod::FixedTalbot;
  int node_count = 32;          // >= 8; even for EulerSummation
  double abscissa_shift = 0.0;  // added to the contour location
};

/// Numerically inverts a one-dimensional Laplace transform at t.
///
/// `transform` must be analytic for Re(z) > abscissa. The contour is placed
/// at gamma = abscissa + max(1, abscissa) * 0.1 + cfg.abscissa_shift; the
/// engine inverts transform(. + gamma) (singularities strictly in the left
/// half-plane) and scales by e^{gamma t}. Values for t <= 0 are defined as 0
/// without invoking the engine. Non-finite transform values raise
/// runtime_error identifying the offending node.
double invert(const TransformFn& transform, double abscissa, double t,
              const InversionConfig& cfg = {});

/// invert() at each point of a strictly increasing grid.
std::vector<double> invert_grid(const TransformFn& transform, double abscissa,
                                const std::vector<double>& points,
                                const InversionConfig& cfg = {});

}  // namespace oscp
