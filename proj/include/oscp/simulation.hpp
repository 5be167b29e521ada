#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "oscp/model.hpp"
#include "oscp/rng.hpp"

namespace oscp {

/// Exit geometry for one path: at least one boundary present. A down target
/// is hit continuously (the active drift is strictly downward); an up target
/// is crossed only by jumps.
struct ExitGeometry {
  std::optional<double> lower;
  std::optional<double> upper;

  static ExitGeometry down(double r) { return {r, std::nullopt}; }
  static ExitGeometry up(double k) { return {std::nullopt, k}; }
  static ExitGeometry interval(double lo, double hi) { return {lo, hi}; }
};

enum class ExitSide { Down, Up, Timeout };

struct ExitOutcome {
  double time = 0.0;
  ExitSide side = ExitSide::Timeout;
  double overshoot = 0.0;  // 0 on Down exits; strictly positive on Up exits
  int regime_switches = 0;
};

/// Monte Carlo estimate of a transform or probability.
struct McEstimate {
  double value = 0.0;
  double stderr_ = 0.0;
  long long n = 0;
  /// Bias bound for paths truncated at t_max: e^{-s t_max} times the
  /// observed timeout fraction (for probabilities, the timeout fraction).
  double truncation_bound = 0.0;
  long long timeouts = 0;
};

enum class SideFilter { Down, Up, Both };

/// Event-driven exact sampler of the switching process: piecewise linear
/// descent at the active drift, jump clocks resampled at regime switches
/// (memoryless), lower crossings solved from the linear segment, upper
/// crossings checked at jump instants. No time discretization anywhere.
class PathSampler {
 public:
  PathSampler(OscillatingModel model, uint64_t seed, double t_max);

  const OscillatingModel& model() const { return model_; }
  uint64_t seed() const { return seed_; }
  double t_max() const { return t_max_; }

  /// One exit sample from start x under the geometry, using the given stream.
  ExitOutcome sample_exit(double x, const ExitGeometry& geom, Rng& rng) const;

  /// Convenience: fresh stream from the sampler's own seed.
  ExitOutcome sample_exit(double x, const ExitGeometry& geom) const;

 private:
  OscillatingModel model_;
  uint64_t seed_;
  double t_max_;
};

/// Mean of e^{-s time - z overshoot} 1{side matches filter} over n paths
/// (timeouts contribute 0). Deterministic for fixed (seed, model, geometry,
/// n): paths are split over a fixed number of lanes whose streams derive
/// from (seed, lane index), and lane moments are combined in lane order.
McEstimate estimate_lt(const PathSampler& sampler, double x, const ExitGeometry& geom, double s,
                       double z, SideFilter filter, long long n);

/// Exit-side frequency (s = z = 0 path of the same machinery).
McEstimate estimate_exit_probability(const PathSampler& sampler, double x,
                                     const ExitGeometry& geom, SideFilter side, long long n);

/// Default truncation horizon for transform estimation: bias <= e^{-50}.
inline double default_t_max(double s) { return 50.0 / s; }

}  // namespace oscp
