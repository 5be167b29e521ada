#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "oscp/asymptotics.hpp"

using namespace oscp;

namespace {

OscillatingModel zero_mean_exp_erlang() {
  return OscillatingModel(Component(1.0, 1.0, JumpLaw::exponential(1.0)),
                          Component(1.0, 1.0, JumpLaw::erlang(2, 2.0)), 0.5);
}

}  // namespace

TEST_CASE("limit params") {
  const DiffusionLimitParams p(2.0, 0.5, 2.0);
  CHECK(p.s1() == doctest::Approx(1.0));
  CHECK(p.s2() == doctest::Approx(4.0));
  CHECK(p.s1() * p.sigma1 == doctest::Approx(std::sqrt(2.0 * p.s)));
  CHECK_THROWS_AS(DiffusionLimitParams(0.0, 1.0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(DiffusionLimitParams(1.0, 1.0, 0.0), std::invalid_argument);
}

TEST_CASE("crossing limit") {
  const DiffusionLimitParams p(1.3, 0.8, 1.7);
  // at the boundary the transform is 1
  CHECK(limit_cross_up(p, 2.0, 1.0, 2.0) == doctest::Approx(1.0).epsilon(1e-14));
  // equal variances at x = b: plain Brownian first passage over k - b
  const DiffusionLimitParams q(1.1, 1.1, 0.9);
  CHECK(limit_cross_up(q, 1.0, 1.0, 2.5) ==
        doctest::Approx(std::exp(-1.5 * q.s1())).epsilon(1e-13));
  // branch continuity at x = b
  const double below = limit_cross_up(p, 1.0, 1.0, 2.0);
  const double above = limit_cross_up(p, 1.0 + 1e-13, 1.0, 2.0);
  CHECK(below == doctest::Approx(above).epsilon(1e-10));
  CHECK_THROWS_AS(limit_cross_up(p, 1.0, 1.0, 0.5), std::invalid_argument);
}

TEST_CASE("passage limit") {
  const DiffusionLimitParams p(1.3, 0.8, 1.7);
  CHECK(limit_passage_down(p, 0.0, 1.0, 0.0) == doctest::Approx(1.0).epsilon(1e-14));
  const DiffusionLimitParams q(1.1, 1.1, 0.9);
  CHECK(limit_passage_down(q, 2.0, 1.0, 0.25) ==
        doctest::Approx(std::exp(-1.75 * q.s1())).epsilon(1e-13));
  const double above = limit_passage_down(p, 1.0, 1.0, 0.0);
  const double below = limit_passage_down(p, 1.0 - 1e-13, 1.0, 0.0);
  CHECK(above == doctest::Approx(below).epsilon(1e-10));
  CHECK_THROWS_AS(limit_passage_down(p, 0.5, 1.0, 0.7), std::invalid_argument);
}

TEST_CASE("interval limit: small-s exit probabilities") {
  for (double sigma1 : {0.7, 1.5})
    for (double sigma2 : {0.9, 2.0})
      for (double b : {0.25, 0.5, 0.75})
        for (double x : {0.2, 0.5, 0.8}) {
          const DiffusionLimitParams p(sigma1, sigma2, 1e-10);
          const auto [down, up] = limit_exit_interval(p, x, b);
          CHECK(down == doctest::Approx(1.0 - x).epsilon(1e-6));
          CHECK(up == doctest::Approx(x).epsilon(1e-6));
          CHECK(down + up == doctest::Approx(1.0).epsilon(1e-6));
        }
}

TEST_CASE("interval limit edges") {
  const DiffusionLimitParams p(1.2, 0.9, 2.0);
  // x -> 0: certain lower exit
  const auto [down0, up0] = limit_exit_interval(p, 1e-9, 0.5);
  CHECK(down0 == doctest::Approx(1.0).epsilon(1e-7));
  CHECK(up0 == doctest::Approx(0.0).epsilon(1e-7));
  // branch continuity at x = b
  const auto lo = limit_exit_interval(p, 0.5, 0.5);
  const auto hi = limit_exit_interval(p, 0.5 + 1e-13, 0.5);
  CHECK(lo.first == doctest::Approx(hi.first).epsilon(1e-10));
  CHECK(lo.second == doctest::Approx(hi.second).epsilon(1e-10));
  CHECK_THROWS_AS(limit_exit_interval(p, 0.0, 0.5), std::invalid_argument);
}

TEST_CASE("degenerate switch positions collapse to one-component exits") {
  const double s = 1.4, sigma1 = 1.3, sigma2 = 0.7, x = 0.4;
  const DiffusionLimitParams p(sigma1, sigma2, s);
  // b -> 0: pure component-2 interval exit
  {
    const auto [down, up] = limit_exit_interval(p, x, 1e-9);
    const double s2 = p.s2();
    CHECK(down == doctest::Approx(std::sinh((1.0 - x) * s2) / std::sinh(s2)).epsilon(1e-9));
    CHECK(up == doctest::Approx(std::sinh(x * s2) / std::sinh(s2)).epsilon(1e-9));
  }
  // b -> 1: pure component-1 interval exit
  {
    const auto [down, up] = limit_exit_interval(p, x, 1.0 - 1e-9);
    const double s1 = p.s1();
    CHECK(down == doctest::Approx(std::sinh((1.0 - x) * s1) / std::sinh(s1)).epsilon(1e-9));
    CHECK(up == doctest::Approx(std::sinh(x * s1) / std::sinh(s1)).epsilon(1e-9));
  }
}

TEST_CASE("large arguments stay finite") {
  const DiffusionLimitParams p(1.0, 1.0, 1e6);  // s_i ~ 1414
  const double v = limit_cross_up(p, 0.2, 0.5, 1.0);
  CHECK(std::isfinite(v));
  CHECK(v >= 0.0);
  CHECK(v <= 1.0);
  const auto [down, up] = limit_exit_interval(p, 0.3, 0.5);
  CHECK(std::isfinite(down));
  CHECK(std::isfinite(up));
}

TEST_CASE("convergence study improves with scale") {
  const auto rows = convergence_study(zero_mean_exp_erlang(), {}, 1.0, {10.0, 50.0, 250.0});
  CHECK(!rows.empty());
  for (const auto& r : rows) {
    CHECK(std::isfinite(r.finite_value));
    CHECK(std::isfinite(r.limit_value));
  }
  CHECK(convergence_violation(rows) == "");
}

TEST_CASE("convergence study input validation") {
  const OscillatingModel drifting(Component(1.0, 0.5, JumpLaw::exponential(1.0)),
                                  Component(1.0, 1.0, JumpLaw::exponential(1.0)), 0.5);
  CHECK_THROWS_AS(convergence_study(drifting, {}, 1.0, {10.0, 50.0}), std::invalid_argument);
  CHECK_THROWS_AS(convergence_study(zero_mean_exp_erlang(), {}, 1.0, {50.0, 10.0}),
                  std::invalid_argument);
}
