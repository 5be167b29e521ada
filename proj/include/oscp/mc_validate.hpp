#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "oscp/model.hpp"

namespace oscp {

struct ValidationRow {
  std::string functional;
  std::string params;
  double closed_form = 0.0;
  double mc_value = 0.0;
  double stderr_ = 0.0;
  double z_score = 0.0;
  bool pass = false;
};

/// Standard models used by the validation grid.
OscillatingModel standard_model_homogeneous();   // zero-mean exponential pair
OscillatingModel standard_model_oscillating();   // exp below, hyper-exp above
OscillatingModel standard_model_zero_mean_osc(); // zero-mean, exp/hyper-exp

/// Runs the built-in validation grid: every closed-form exit transform
/// (auxiliary and oscillating; passage-down, cross-up and interval-exit
/// families) against its Monte Carlo estimate at n paths, plus the
/// limit-probability row (lower-exit frequency from [0,1] at x=0.5 vs 3/4).
/// A row passes when |closed - mc| <= 3.5 stderr + truncation bound.
std::vector<ValidationRow> run_mc_validation(long long n, uint64_t seed);

}  // namespace oscp
