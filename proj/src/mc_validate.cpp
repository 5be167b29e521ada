#include "oscp/mc_validate.hpp"

#include <cmath>
#include "oscp/boundary.hpp"
#include "oscp/simulation.hpp"

namespace oscp {

namespace {

Component unit_exponential() { return Component(1.0, 1.0, JumpLaw::exponential(1.0)); }

struct Cell {
  std::string functional;
  std::string params;
  double closed_form;
  OscillatingModel model;
  double x;
  ExitGeometry geom;
  double s;
  double z;
  SideFilter filter;
};

ValidationRow run_cell(const Cell& c, long long n, uint64_t seed, int index) {
  const PathSampler sampler(c.model, seed + 0x9E3779B97F4A7C15ULL * static_cast<uint64_t>(index),
                            default_t_max(c.s));
  const McEstimate est = estimate_lt(sampler, c.x, c.geom, c.s, c.z, c.filter, n);
  ValidationRow row;
  row.functional = c.functional;
  row.params = c.params;
  row.closed_form = c.closed_form;
  row.mc_value = est.value;
  row.stderr_ = est.stderr_;
  row.z_score = est.stderr_ > 0.0 ? (est.value - c.closed_form) / est.stderr_
                                  : (est.value == c.closed_form ? 0.0 : INFINITY);
  row.pass = std::abs(c.closed_form - est.value) <= 3.5 * est.stderr_ + est.truncation_bound;
  return row;
}

}  // namespace

OscillatingModel standard_model_homogeneous() {
  return OscillatingModel(unit_exponential(), unit_exponential(), 0.5);
}

OscillatingModel standard_model_oscillating() {
  // mixed drift-dominated regimes; component 2 has two-phase jumps
  Component c2(1.2, 0.8, JumpLaw::hyper_exponential({0.4, 0.6}, {2.0, 0.8}));
  return OscillatingModel(unit_exponential(), std::move(c2), 0.5);
}

OscillatingModel standard_model_zero_mean_osc() {
  // lambda m1 = a for both components: mean rate 0
  Component c2(1.0, 0.8, JumpLaw::hyper_exponential({0.5, 0.5}, {0.5, 2.0}));
  return OscillatingModel(unit_exponential(), std::move(c2), 0.5);
}

std::vector<ValidationRow> run_mc_validation(long long n, uint64_t seed) {
  const OscillatingModel hom = standard_model_homogeneous();
  const OscillatingModel osc = standard_model_oscillating();
  const OscillatingModel osc0 = standard_model_zero_mean_osc();
  const Component& aux = hom.comp1;

  std::vector<Cell> cells;
  auto add = [&cells](std::string functional, std::string params, double closed,
                      const OscillatingModel& model, double x, ExitGeometry geom, double s,
                      double z, SideFilter filter) {
    cells.push_back({std::move(functional), std::move(params), closed, model, x, geom, s, z,
                     filter});
  };

  // passage-down family
  add("aux-passage-down", "model=hom;x=1;s=1", passage_down_lt(aux, 1.0, 1.0), hom, 1.0,
      ExitGeometry::down(0.0), 1.0, 0.0, SideFilter::Down);
  add("osc-passage-down", "model=hom;x=0.8;r=0;s=1", osc_passage_down_lt(hom, 0.8, 0.0, 1.0), hom,
      0.8, ExitGeometry::down(0.0), 1.0, 0.0, SideFilter::Down);
  add("osc-passage-down", "model=osc;x=0.3;r=0;s=1", osc_passage_down_lt(osc, 0.3, 0.0, 1.0), osc,
      0.3, ExitGeometry::down(0.0), 1.0, 0.0, SideFilter::Down);
  add("osc-passage-down", "model=osc;x=1;r=0;s=0.5", osc_passage_down_lt(osc, 1.0, 0.0, 0.5), osc,
      1.0, ExitGeometry::down(0.0), 0.5, 0.0, SideFilter::Down);
  add("osc-passage-down", "model=osc0;x=0.5;r=0;s=2", osc_passage_down_lt(osc0, 0.5, 0.0, 2.0),
      osc0, 0.5, ExitGeometry::down(0.0), 2.0, 0.0, SideFilter::Down);

  // cross-up family (down-passage to the auxiliary level is never triggered:
  // the up geometry has no lower boundary)
  add("aux-cross-up", "model=hom;x=1;z=0.3;s=1", cross_up_lt(aux, 1.0, 0.3, 1.0).real(), hom, -1.0,
      ExitGeometry::up(0.0), 1.0, 0.3, SideFilter::Up);
  add("aux-cross-up", "model=osc.comp2;x=0.5;z=0;s=1",
      cross_up_lt(osc.comp2, 0.5, 0.0, 1.0).real(),
      OscillatingModel(osc.comp2, osc.comp2, 0.0), -0.5, ExitGeometry::up(0.0), 1.0, 0.0,
      SideFilter::Up);
  add("osc-cross-up", "model=osc;x=0.3;k=1.5;z=0;s=1",
      osc_cross_up_lt(osc, 0.3, 1.5, 0.0, 1.0).real(), osc, 0.3, ExitGeometry::up(1.5), 1.0, 0.0,
      SideFilter::Up);
  add("osc-cross-up", "model=osc;x=0.9;k=1.5;z=0.5;s=1",
      osc_cross_up_lt(osc, 0.9, 1.5, 0.5, 1.0).real(), osc, 0.9, ExitGeometry::up(1.5), 1.0, 0.5,
      SideFilter::Up);
  add("osc-cross-up", "model=hom;x=0.2;k=1;z=0;s=1",
      osc_cross_up_lt(hom, 0.2, 1.0, 0.0, 1.0).real(), hom, 0.2, ExitGeometry::up(1.0), 1.0, 0.0,
      SideFilter::Up);

  // interval-exit family (both sides of each cell)
  const auto aux_exit = exit_interval_lt(aux, 0.5, 1.0, 0.0, 1.0);
  add("aux-exit-down", "model=hom;x=0.5;d=1;s=1", aux_exit.down, hom, 0.5,
      ExitGeometry::interval(0.0, 1.0), 1.0, 0.0, SideFilter::Down);
  add("aux-exit-up", "model=hom;x=0.5;d=1;z=0;s=1", aux_exit.up.real(), hom, 0.5,
      ExitGeometry::interval(0.0, 1.0), 1.0, 0.0, SideFilter::Up);
  const auto hom_exit = osc_exit_interval_lt(hom, 0.5, 1.0, 0.0, 1.0);
  add("osc-exit-down", "model=hom;x=0.5;B=1;s=1", hom_exit.down, hom, 0.5,
      ExitGeometry::interval(0.0, 1.0), 1.0, 0.0, SideFilter::Down);
  add("osc-exit-up", "model=hom;x=0.5;B=1;z=0;s=1", hom_exit.up.real(), hom, 0.5,
      ExitGeometry::interval(0.0, 1.0), 1.0, 0.0, SideFilter::Up);
  const auto osc_exit = osc_exit_interval_lt(osc, 0.4, 1.0, 0.0, 1.0);
  add("osc-exit-down", "model=osc;x=0.4;B=1;s=1", osc_exit.down, osc, 0.4,
      ExitGeometry::interval(0.0, 1.0), 1.0, 0.0, SideFilter::Down);
  add("osc-exit-up", "model=osc;x=0.4;B=1;z=0;s=1", osc_exit.up.real(), osc, 0.4,
      ExitGeometry::interval(0.0, 1.0), 1.0, 0.0, SideFilter::Up);
  const auto osc_exit2 = osc_exit_interval_lt(osc, 0.7, 1.2, 0.4, 0.5);
  add("osc-exit-down", "model=osc;x=0.7;B=1.2;s=0.5", osc_exit2.down, osc, 0.7,
      ExitGeometry::interval(0.0, 1.2), 0.5, 0.0, SideFilter::Down);
  add("osc-exit-up", "model=osc;x=0.7;B=1.2;z=0.4;s=0.5", osc_exit2.up.real(), osc, 0.7,
      ExitGeometry::interval(0.0, 1.2), 0.5, 0.4, SideFilter::Up);
  const auto osc0_exit = osc_exit_interval_lt(osc0, 0.5, 1.0, 0.0, 1.0);
  add("osc-exit-down", "model=osc0;x=0.5;B=1;s=1", osc0_exit.down, osc0, 0.5,
      ExitGeometry::interval(0.0, 1.0), 1.0, 0.0, SideFilter::Down);
  add("osc-exit-up", "model=osc0;x=0.5;B=1;z=0;s=1", osc0_exit.up.real(), osc0, 0.5,
      ExitGeometry::interval(0.0, 1.0), 1.0, 0.0, SideFilter::Up);

  std::vector<ValidationRow> rows;
  rows.reserve(cells.size() + 1);
  int index = 0;
  for (const Cell& c : cells) rows.push_back(run_cell(c, n, seed, index++));

  // limit-probability row: lower-exit frequency from [0,1] at x = 0.5 for the
  // zero-mean exponential model; the s -> 0 closed form is (B-x+1)/(B+1).
  {
    const PathSampler sampler(hom, seed + 0x9E3779B97F4A7C15ULL * static_cast<uint64_t>(index),
                              1000.0);
    const McEstimate est =
        estimate_exit_probability(sampler, 0.5, ExitGeometry::interval(0.0, 1.0),
                                  SideFilter::Down, n);
    ValidationRow row;
    row.functional = "limit-prob-down";
    row.params = "model=hom;x=0.5;B=1;s=0";
    row.closed_form = 0.75;
    row.mc_value = est.value;
    row.stderr_ = est.stderr_;
    row.z_score = est.stderr_ > 0.0 ? (est.value - 0.75) / est.stderr_ : 0.0;
    row.pass = std::abs(est.value - 0.75) <= 3.5 * est.stderr_ + est.truncation_bound;
    rows.push_back(row);
  }
  return rows;
}

}  // namespace oscp
