#include "oscp/asymptotics.hpp"

#include <cmath>
#include <map>
#include <sstream>
#include <stdexcept>

#include "oscp/boundary.hpp"

namespace oscp {

namespace {

// sh and ch scaled by e^{-a}: shh(a) = sinh(a) e^{-a}, chh(a) = cosh(a) e^{-a}.
// Exact for all a >= 0 (no overflow; relative accuracy preserved near 0 via
// expm1). Formulas below carry the e^{a} factors explicitly so that only
// differences of the scale arguments are exponentiated.
double shh(double a) { return -0.5 * std::expm1(-2.0 * a); }
double chh(double a) { return 0.5 * (1.0 + std::exp(-2.0 * a)); }

}  // namespace

DiffusionLimitParams::DiffusionLimitParams(double sigma1_, double sigma2_, double s_)
    : sigma1(sigma1_), sigma2(sigma2_), s(s_) {
  if (!(sigma1 > 0.0) || !(sigma2 > 0.0))
    throw std::invalid_argument("DiffusionLimitParams: sigma_i must be > 0");
  if (!(s > 0.0)) throw std::invalid_argument("DiffusionLimitParams: s must be > 0");
}

double DiffusionLimitParams::s1() const { return std::sqrt(2.0 * s) / sigma1; }
double DiffusionLimitParams::s2() const { return std::sqrt(2.0 * s) / sigma2; }

double limit_cross_up(const DiffusionLimitParams& p, double x, double b, double k) {
  if (!(k >= std::max(x, b))) throw std::invalid_argument("limit_cross_up: requires k >= max(x, b)");
  const double D = (k - b) * p.s2();
  const double den = p.sigma1 * chh(D) + p.sigma2 * shh(D);
  if (x <= b) return p.sigma1 * std::exp(-(b - x) * p.s1() - D) / den;
  const double E = (x - b) * p.s2();
  return std::exp(E - D) * (p.sigma1 * chh(E) + p.sigma2 * shh(E)) / den;
}

double limit_passage_down(const DiffusionLimitParams& p, double x, double b, double r) {
  if (!(r <= std::min(x, b)))
    throw std::invalid_argument("limit_passage_down: requires r <= min(x, b)");
  const double G = (b - r) * p.s1();
  const double den = p.sigma1 * shh(G) + p.sigma2 * chh(G);
  if (x >= b) return p.sigma2 * std::exp(-(x - b) * p.s2() - G) / den;
  const double H = (b - x) * p.s1();
  return std::exp(H - G) * (p.sigma1 * shh(H) + p.sigma2 * chh(H)) / den;
}

std::pair<double, double> limit_exit_interval(const DiffusionLimitParams& p, double x, double b) {
  if (!(x > 0.0 && x < 1.0 && b > 0.0 && b < 1.0))
    throw std::invalid_argument("limit_exit_interval: requires x, b in (0, 1)");
  const double s1 = p.s1(), s2 = p.s2();
  const double alpha = b * s1;
  const double beta = (1.0 - b) * s2;
  const double den = p.sigma1 * shh(alpha) * chh(beta) + p.sigma2 * shh(beta) * chh(alpha);
  if (x <= b) {
    const double ap = (b - x) * s1;
    const double down =
        std::exp(ap - alpha) * (p.sigma1 * shh(ap) * chh(beta) + p.sigma2 * shh(beta) * chh(ap)) /
        den;
    const double up = p.sigma1 * shh(x * s1) * std::exp(x * s1 - alpha - beta) / den;
    return {down, up};
  }
  const double g = (x - b) * s2;
  const double up =
      std::exp(g - beta) * (p.sigma1 * shh(alpha) * chh(g) + p.sigma2 * shh(g) * chh(alpha)) / den;
  const double down = p.sigma2 * shh((1.0 - x) * s2) * std::exp((1.0 - x) * s2 - alpha - beta) / den;
  return {down, up};
}

std::vector<ConvergenceRow> convergence_study(const OscillatingModel& model,
                                              const ScalingGeometry& g, double s,
                                              const std::vector<double>& B_list,
                                              const InversionConfig& cfg) {
  const MomentRates m1 = model.comp1.moment_rates();
  const MomentRates m2 = model.comp2.moment_rates();
  if (std::abs(m1.mean_rate) > 1e-9 || std::abs(m2.mean_rate) > 1e-9)
    throw std::invalid_argument("convergence_study: components must have zero mean rate");
  for (size_t i = 1; i < B_list.size(); ++i)
    if (!(B_list[i] > B_list[i - 1]))
      throw std::invalid_argument("convergence_study: B_list must be increasing");
  if (!(g.x > 0.0 && g.x <= g.b && g.b > 0.0 && g.b < 1.0 && g.k > g.b && g.r <= g.x &&
        g.u > 0.0 && g.x_neg + g.u > 0.0))
    throw std::invalid_argument("convergence_study: inconsistent geometry");

  const double sigma1 = std::sqrt(m1.variance_rate);
  const double sigma2 = std::sqrt(m2.variance_rate);
  const DiffusionLimitParams lp(sigma1, sigma2, s);
  const double s1 = lp.s1(), s2 = lp.s2();
  const double root2s = std::sqrt(2.0 * s);
  const double x_hi = 0.5 * (g.b + g.k);        // x >= b branch of the crossing rows
  const double x_hi_int = 0.5 * (g.b + 1.0);    // x >= b branch of the interval rows

  std::vector<ConvergenceRow> rows;
  auto push = [&rows](const std::string& name, double B, double finite, double limit) {
    rows.push_back({name, B, finite, limit, std::abs(finite - limit)});
  };

  for (double B : B_list) {
    const double se = s / (B * B);
    const OscillatingModel scaled(model.comp1, model.comp2, g.b * B);
    const OscFunctionals osc(scaled, se, cfg);
    const KernelEvaluator& kq = osc.kernels();
    const Resolvent& r1 = kq.resolvent1();
    const Resolvent& r2 = kq.resolvent2();

    push("resolvent1", B, r1(g.x * B) / B, 2.0 / (sigma1 * root2s) * std::sinh(g.x * s1));
    push("resolvent2", B, r2(g.x * B) / B, 2.0 / (sigma2 * root2s) * std::sinh(g.x * s2));
    push("cramer1", B, B * r1.cramer_root(), s1);
    push("cramer2", B, B * r2.cramer_root(), s2);

    push("kernel_k_neg", B, kq.k_kernel(g.x_neg * B, g.u * B) / B,
         2.0 / (sigma2 * root2s) * std::sinh((g.x_neg + g.u) * s2));
    push("kernel_k_pos", B, kq.k_kernel(g.x * B, g.u * B) / B,
         2.0 / (sigma2 * sigma2 * root2s) *
             (sigma1 * std::sinh(g.x * s1) * std::cosh(g.u * s2) +
              sigma2 * std::sinh(g.u * s2) * std::cosh(g.x * s1)));
    push("kernel_f", B, kq.f_kernel(g.u * B),
         sigma1 / (sigma2 * sigma2) * (sigma1 * std::cosh(g.u * s2) + sigma2 * std::sinh(g.u * s2)));

    push("frak_k_neg", B, kq.k_frak0(g.x_neg * B, g.u * B), std::cosh((g.x_neg + g.u) * s2));
    push("frak_k_pos", B, kq.k_frak0(g.x * B, g.u * B),
         sigma1 / sigma2 * std::sinh(g.x * s1) * std::sinh(g.u * s2) +
             std::cosh(g.u * s2) * std::cosh(g.x * s1));

    const double c2 = r2.cramer_root();
    push("c_factor_neg", B, r1.c_factor(c2, g.x_neg * B).real(), std::exp(g.x_neg * s2));
    push("c_factor_pos", B, r1.c_factor(c2, g.x * B).real(),
         sigma1 / sigma2 * std::sinh(g.x * s1) + std::cosh(g.x * s1));

    push("cross_up_low", B, osc.cross_up(g.x * B, g.k * B, 0.0).real(),
         limit_cross_up(lp, g.x, g.b, g.k));
    push("cross_up_high", B, osc.cross_up(x_hi * B, g.k * B, 0.0).real(),
         limit_cross_up(lp, x_hi, g.b, g.k));
    push("passage_down_mid", B, osc.passage_down(g.x * B, g.r * B),
         limit_passage_down(lp, g.x, g.b, g.r));
    push("passage_down_high", B, osc.passage_down(x_hi * B, g.r * B),
         limit_passage_down(lp, x_hi, g.b, g.r));

    const auto lo = osc.exit_interval(g.x * B, B, 0.0);
    const auto lo_lim = limit_exit_interval(lp, g.x, g.b);
    push("exit_down_low", B, lo.down, lo_lim.first);
    push("exit_up_low", B, lo.up.real(), lo_lim.second);
    const auto hi = osc.exit_interval(x_hi_int * B, B, 0.0);
    const auto hi_lim = limit_exit_interval(lp, x_hi_int, g.b);
    push("exit_down_high", B, hi.down, hi_lim.first);
    push("exit_up_high", B, hi.up.real(), hi_lim.second);
  }
  return rows;
}

std::string convergence_violation(const std::vector<ConvergenceRow>& rows, double slack) {
  std::map<std::string, std::vector<const ConvergenceRow*>> groups;
  std::vector<std::string> order;
  for (const auto& r : rows) {
    auto [it, inserted] = groups.try_emplace(r.functional);
    if (inserted) order.push_back(r.functional);
    it->second.push_back(&r);
  }
  for (const auto& name : order) {
    const auto& seq = groups[name];
    if (seq.size() < 2) continue;
    for (size_t j = 2; j < seq.size(); ++j) {
      if (seq[j]->abs_err > (1.0 + slack) * seq[j - 1]->abs_err) {
        std::ostringstream msg;
        msg << name << ": error " << seq[j]->abs_err << " at B=" << seq[j]->scale
            << " exceeds " << (1.0 + slack) << " x error " << seq[j - 1]->abs_err << " at B="
            << seq[j - 1]->scale;
        return msg.str();
      }
    }
    if (!(seq.back()->abs_err < seq.front()->abs_err)) {
      std::ostringstream msg;
      msg << name << ": error at B=" << seq.back()->scale << " (" << seq.back()->abs_err
          << ") does not improve on B=" << seq.front()->scale << " (" << seq.front()->abs_err
          << ")";
      return msg.str();
    }
  }
  return {};
}

}  // namespace oscp
