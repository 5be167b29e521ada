// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Run via ctest (-R acceptance) or directly.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "oscp/asymptotics.hpp"
#include "oscp/boundary.hpp"
#include "oscp/cli.hpp"
#include "oscp/inversion.hpp"
#include "oscp/mc_validate.hpp"
#include "oscp/simulation.hpp"

using namespace oscp;
namespace fs = std::filesystem;

namespace {

int g_failures = 0;

struct Criterion {
  const char* name;
  std::function<bool(std::string&)> run;
  double time_limit_s;
};

Component unit_exp() { return Component(1.0, 1.0, JumpLaw::exponential(1.0)); }

OscillatingModel homogeneous_model() { return OscillatingModel(unit_exp(), unit_exp(), 0.5); }

// ---- 1. root/exponent residuals --------------------------------------------
bool roots_and_exponents(std::string& detail) {
  const std::vector<Component> comps = {
      unit_exp(),
      Component(1.2, 0.8, JumpLaw::hyper_exponential({0.4, 0.6}, {2.0, 0.8})),
      Component(1.0, 1.0, JumpLaw::erlang(2, 2.0)),
  };
  double worst = 0.0;
  for (const Component& comp : comps)
    for (double s : {0.1, 1.0, 5.0}) {
      const double c = comp.cramer_root(s);
      worst = std::max(worst, std::abs(comp.laplace_exponent(c) - s) / s);
    }
  std::ostringstream os;
  os << "max relative residual " << worst;
  detail = os.str();
  return worst < 1e-10;
}

// ---- 2. resolvent goldens ---------------------------------------------------
bool resolvent_goldens(std::string& detail) {
  const std::vector<Component> comps = {
      unit_exp(),
      Component(1.2, 0.8, JumpLaw::hyper_exponential({0.4, 0.6}, {2.0, 0.8})),
  };
  double worst_rel = 0.0, worst_origin = 0.0;
  for (const Component& comp : comps) {
    const Resolvent res(comp, 1.0);
    worst_origin = std::max(worst_origin, std::abs(res(0.0) - 1.0 / comp.drift()));
    const TransformFn tf = [&res](Complex z) { return res.transform(z); };
    for (int i = 1; i <= 10; ++i) {
      const double x = 0.4 * i;
      const double inverted = invert(tf, res.abscissa(), x);
      worst_rel = std::max(worst_rel, std::abs(inverted - res(x)) / std::abs(res(x)));
    }
  }
  std::ostringstream os;
  os << "max relative error " << worst_rel << ", |R(0)-1/a| " << worst_origin;
  detail = os.str();
  return worst_rel < 1e-7 && worst_origin < 1e-12;
}

// ---- 3. homogeneous-reduction equivalence ----------------------------------
bool homogeneous_equivalence(std::string& detail) {
  double worst = 0.0;
  for (double s : {0.5, 2.0}) {
    const OscFunctionals osc(homogeneous_model(), s);
    const Resolvent res(unit_exp(), s);
    const double c = res.cramer_root();
    for (double bound : {1.0, 1.5, 2.0}) {
      for (double frac : {0.2, 0.5, 0.8}) {
        const double x = frac * bound;
        // one-boundary: passage below 0 and crossing of `bound`
        worst = std::max(worst, std::abs(osc.passage_down(x, 0.0) - std::exp(-x * c)));
        for (double z : {0.0, 0.5}) {
          const Complex got = osc.cross_up(x, bound, Complex(z));
          const Complex ref =
              res.c_factor(Complex(z), bound - x) - res(bound - x) * res.cramer_deflated(z);
          worst = std::max(worst, std::abs(got - ref));
        }
        // two-sided exit from [0, bound]
        const double down_ref = res(bound - x) / res(bound);
        for (double z : {0.0, 0.5}) {
          const auto got = osc.exit_interval(x, bound, Complex(z));
          const Complex up_ref =
              res.c_factor(Complex(z), bound - x) - down_ref * res.c_factor(Complex(z), bound);
          worst = std::max(worst, std::abs(got.down - down_ref));
          worst = std::max(worst, std::abs(got.up - up_ref));
        }
      }
    }
  }
  std::ostringstream os;
  os << "max |theorem - reduction| " << worst;
  detail = os.str();
  return worst < 1e-8;
}

// ---- 4 & 5. Monte Carlo validation ------------------------------------------
bool mc_validation(std::string& detail) {
  const auto rows = run_mc_validation(1000000, 42);
  int failures = 0;
  double worst_z = 0.0;
  for (const auto& r : rows) {
    worst_z = std::max(worst_z, std::abs(r.z_score));
    if (!r.pass) {
      ++failures;
      std::fprintf(stderr, "  MC cell failed: %s %s z=%g\n", r.functional.c_str(),
                   r.params.c_str(), r.z_score);
    }
  }
  std::ostringstream os;
  os << rows.size() << " cells, max |z| " << worst_z;
  detail = os.str();
  return failures == 0;
}

bool limit_probability(std::string& detail) {
  const PathSampler sampler(homogeneous_model(), 42, 1000.0);
  const McEstimate est = estimate_exit_probability(
      sampler, 0.5, ExitGeometry::interval(0.0, 1.0), SideFilter::Down, 1000000);
  std::ostringstream os;
  os << "frequency " << est.value << " vs 0.75, stderr " << est.stderr_;
  detail = os.str();
  return std::abs(est.value - 0.75) <= 3.5 * est.stderr_ + est.truncation_bound;
}

// ---- 6. scaling-limit convergence -------------------------------------------
bool scaling_limits(std::string& detail) {
  const OscillatingModel model(unit_exp(), Component(1.0, 1.0, JumpLaw::erlang(2, 2.0)), 0.5);
  const auto rows = convergence_study(model, {}, 1.0, {10.0, 50.0, 250.0});
  const std::string violation = convergence_violation(rows);
  if (!violation.empty()) {
    detail = violation;
    return false;
  }

  // exit-weight completeness at s = 1e-10: the sinh/cosh forms and the
  // finite-scale evaluation at B = 250 must both give down + up ~= 1
  double worst = 0.0;
  const MomentRates mr1 = model.comp1.moment_rates();
  const MomentRates mr2 = model.comp2.moment_rates();
  const DiffusionLimitParams lp(std::sqrt(mr1.variance_rate), std::sqrt(mr2.variance_rate),
                                1e-10);
  for (double x : {0.3, 0.5, 0.75}) {
    const auto [down, up] = limit_exit_interval(lp, x, 0.5);
    worst = std::max(worst, std::abs(down + up - 1.0));
  }
  const double B = 250.0;
  const OscillatingModel scaled(model.comp1, model.comp2, 0.5 * B);
  const OscFunctionals osc(scaled, 1e-10 / (B * B));
  for (double x : {0.3, 0.75}) {
    const auto v = osc.exit_interval(x * B, B, Complex(0.0));
    worst = std::max(worst, std::abs(v.down + v.up.real() - 1.0));
  }
  std::ostringstream os;
  os << "all error sequences improve; max |down+up-1| " << worst << " at s=1e-10";
  detail = os.str();
  return worst < 1e-4;
}

// ---- 7. level-transform identity -------------------------------------------
bool pr_identity(std::string& detail) {
  const Component comp = unit_exp();
  const struct {
    double s, z, p;
  } triples[] = {{1.0, 0.0, 3.0}, {1.0, 2.999, 3.0}, {2.0, 0.5, 4.0}};
  double worst = 0.0;
  for (const auto& t : triples) {
    const double x_max = 1.05 * (-std::log(1e-10 * t.p) / t.p);
    const PrCheck chk = verify_pecherskii_rogozin(comp, Complex(t.z), t.s, t.p, x_max);
    worst = std::max(worst, chk.abs_err);
  }
  std::ostringstream os;
  os << "max |lhs - rhs| " << worst;
  detail = os.str();
  return worst < 1e-6;
}

// ---- 8. CLI determinism ------------------------------------------------------
bool cli_determinism(std::string& detail) {
  const fs::path dir = fs::temp_directory_path() / "oscp_acceptance";
  fs::create_directories(dir);
  const std::string out1 = (dir / "mc1.csv").string();
  const std::string out2 = (dir / "mc2.csv").string();
  auto run = [](const std::string& out) {
    return run_cli({"mc-validate", "--n", "20000", "--seed", "42", "--output", out});
  };
  if (run(out1) != 0 || run(out2) != 0) {
    detail = "mc-validate exited nonzero";
    return false;
  }
  auto slurp = [](const std::string& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
  };
  const std::string a = slurp(out1), b = slurp(out2);
  std::error_code ec;
  fs::remove_all(dir, ec);
  std::ostringstream os;
  os << a.size() << " bytes, identical " << (a == b ? "yes" : "no");
  detail = os.str();
  return !a.empty() && a == b;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {"1 root/exponent residuals", roots_and_exponents, 1.0},
      {"2 resolvent goldens vs inversion", resolvent_goldens, 10.0},
      {"3 homogeneous-reduction equivalence", homogeneous_equivalence, 10.0},
      {"4 Monte Carlo validation grid", mc_validation, 300.0},
      {"5 limit-probability sanity", limit_probability, 300.0},
      {"6 scaling-limit convergence", scaling_limits, 30.0},
      {"7 level-transform identity", pr_identity, 5.0},
      {"8 CLI determinism", cli_determinism, 120.0},
  };

  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    std::string detail;
    bool ok = false;
    try {
      ok = c.run(detail);
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = elapsed <= c.time_limit_s;
    if (!ok || !in_time) ++g_failures;
    std::printf("%s criterion %s (%.2fs%s) %s\n", ok && in_time ? "PASS" : "FAIL", c.name,
                elapsed, in_time ? "" : " OVER LIMIT", detail.c_str());
    std::fflush(stdout);
  }
  return g_failures == 0 ? 0 : 1;
}
