#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "oscp/boundary.hpp"
#include "oscp/simulation.hpp"

using namespace oscp;

namespace {

Component unit_exp() { return Component(1.0, 1.0, JumpLaw::exponential(1.0)); }

OscillatingModel homogeneous_model() { return OscillatingModel(unit_exp(), unit_exp(), 0.5); }

OscillatingModel mixed_model() {
  return OscillatingModel(unit_exp(),
                          Component(1.2, 0.8, JumpLaw::hyper_exponential({0.4, 0.6}, {2.0, 0.8})),
                          0.5);
}

}  // namespace

TEST_CASE("pure drift descends deterministically") {
  const Component drift(1.0, 0.0, JumpLaw::exponential(1.0));
  const PathSampler sampler(OscillatingModel(drift, drift, 0.5), 7, 100.0);
  const ExitOutcome o = sampler.sample_exit(1.0, ExitGeometry::down(0.0));
  CHECK(o.side == ExitSide::Down);
  CHECK(o.time == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(o.overshoot == 0.0);
}

TEST_CASE("piecewise drift through the switch level") {
  // a2 = 2 above b, a1 = 1 below: descent 1 -> 0.5 takes 0.25, 0.5 -> 0 takes 0.5
  const Component lower(1.0, 0.0, JumpLaw::exponential(1.0));
  const Component upper(2.0, 0.0, JumpLaw::exponential(1.0));
  const PathSampler sampler(OscillatingModel(lower, upper, 0.5), 7, 100.0);
  const ExitOutcome o = sampler.sample_exit(1.0, ExitGeometry::down(0.0));
  CHECK(o.side == ExitSide::Down);
  CHECK(o.time == doctest::Approx(0.75).epsilon(1e-15));
  CHECK(o.overshoot == 0.0);
  CHECK(o.regime_switches == 1);
}

TEST_CASE("immediate exits at the boundary") {
  const PathSampler sampler(homogeneous_model(), 3, 100.0);
  const ExitOutcome down = sampler.sample_exit(0.0, ExitGeometry::interval(0.0, 1.0));
  CHECK(down.side == ExitSide::Down);
  CHECK(down.time == 0.0);
  const ExitOutcome up = sampler.sample_exit(1.5, ExitGeometry::up(1.0));
  CHECK(up.side == ExitSide::Up);
  CHECK(up.overshoot == doctest::Approx(0.5));
}

TEST_CASE("overshoot law by exit side") {
  const PathSampler sampler(mixed_model(), 11, 1000.0);
  Rng rng(99);
  for (int i = 0; i < 20000; ++i) {
    const ExitOutcome o = sampler.sample_exit(0.6, ExitGeometry::interval(0.0, 1.2), rng);
    REQUIRE(o.side != ExitSide::Timeout);
    if (o.side == ExitSide::Down) {
      CHECK(o.overshoot == 0.0);
    } else {
      CHECK(o.overshoot > 0.0);
    }
  }
}

TEST_CASE("estimates are reproducible bit for bit") {
  const PathSampler sampler(mixed_model(), 42, 50.0);
  const McEstimate a =
      estimate_lt(sampler, 0.4, ExitGeometry::interval(0.0, 1.0), 1.0, 0.0, SideFilter::Down,
                  50000);
  const McEstimate b =
      estimate_lt(sampler, 0.4, ExitGeometry::interval(0.0, 1.0), 1.0, 0.0, SideFilter::Down,
                  50000);
  CHECK(a.value == b.value);
  CHECK(a.stderr_ == b.stderr_);
  CHECK(a.timeouts == b.timeouts);
}

TEST_CASE("estimate matches the closed forms") {
  const long long n = 200000;
  {
    const PathSampler sampler(homogeneous_model(), 42, default_t_max(1.0));
    const McEstimate est =
        estimate_lt(sampler, 1.0, ExitGeometry::down(0.0), 1.0, 0.0, SideFilter::Down, n);
    const double exact = 0.19828815286220623;  // e^{-c(1)}
    CHECK(std::abs(est.value - exact) <= 3.5 * est.stderr_ + est.truncation_bound);
    CHECK(est.stderr_ > 0.0);
    CHECK(est.stderr_ < 2e-3);
  }
  {
    // crossing of level 0 from -1 (spatially homogeneous component)
    const PathSampler sampler(homogeneous_model(), 43, default_t_max(1.0));
    const McEstimate est =
        estimate_lt(sampler, -1.0, ExitGeometry::up(0.0), 1.0, 0.3, SideFilter::Up, n);
    CHECK(std::abs(est.value - 0.15836989043047214) <= 3.5 * est.stderr_ + est.truncation_bound);
  }
}

TEST_CASE("filtered sides partition the transform mass") {
  const PathSampler sampler(mixed_model(), 17, default_t_max(1.0));
  const auto geom = ExitGeometry::interval(0.0, 1.0);
  const McEstimate down = estimate_lt(sampler, 0.5, geom, 1.0, 0.0, SideFilter::Down, 100000);
  const McEstimate up = estimate_lt(sampler, 0.5, geom, 1.0, 0.0, SideFilter::Up, 100000);
  CHECK(down.value + up.value <= 1.0 + 3.5 * (down.stderr_ + up.stderr_));
  // huge s kills the transform
  const PathSampler fast(mixed_model(), 18, default_t_max(100.0));
  const McEstimate tiny = estimate_lt(fast, 0.5, geom, 100.0, 0.0, SideFilter::Both, 20000);
  CHECK(tiny.value < 1e-3);
}

TEST_CASE("timeouts feed the truncation bound") {
  const PathSampler sampler(mixed_model(), 5, 0.05);  // tiny horizon
  const McEstimate est =
      estimate_lt(sampler, 0.5, ExitGeometry::interval(0.0, 1.0), 1.0, 0.0, SideFilter::Both,
                  20000);
  CHECK(est.timeouts > 0);
  CHECK(est.truncation_bound > 0.0);
  CHECK(est.truncation_bound <= std::exp(-1.0 * 0.05));
}

TEST_CASE("exit probability estimator hits the diffusive limit value") {
  const PathSampler sampler(homogeneous_model(), 42, 1000.0);
  const McEstimate est = estimate_exit_probability(
      sampler, 0.5, ExitGeometry::interval(0.0, 1.0), SideFilter::Down, 200000);
  CHECK(std::abs(est.value - 0.75) <= 3.5 * est.stderr_ + est.truncation_bound);
}

TEST_CASE("argument validation") {
  const PathSampler sampler(mixed_model(), 1, 10.0);
  CHECK_THROWS_AS(estimate_lt(sampler, 0.5, ExitGeometry::interval(0.0, 1.0), 0.0, 0.0,
                              SideFilter::Both, 100),
                  std::invalid_argument);
  CHECK_THROWS_AS(estimate_lt(sampler, 0.5, ExitGeometry::interval(0.0, 1.0), 1.0, -0.1,
                              SideFilter::Both, 100),
                  std::invalid_argument);
  CHECK_THROWS_AS(estimate_lt(sampler, 0.5, ExitGeometry::interval(0.0, 1.0), 1.0, 0.0,
                              SideFilter::Both, 0),
                  std::invalid_argument);
  CHECK_THROWS_AS(sampler.sample_exit(0.5, ExitGeometry{}), std::invalid_argument);
  CHECK_THROWS_AS(PathSampler(mixed_model(), 1, 0.0), std::invalid_argument);
}
