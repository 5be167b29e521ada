#include "oscp/boundary.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "oscp/quadrature.hpp"

namespace oscp {

double passage_down_lt(const Component& comp, double x, double s) {
  if (x < 0.0) throw std::invalid_argument("passage_down_lt: x must be >= 0");
  return std::exp(-x * comp.cramer_root(s));
}

Complex cross_up_lt(const Resolvent& res, double x, Complex z) {
  if (x < 0.0) throw std::invalid_argument("cross_up_lt: x must be >= 0");
  const Complex exz = std::exp(x * z);
  return exz - res(x) * res.cramer_deflated(z) -
         res.exponent_minus_s(z) * exz * res.weighted_integral0(x, z);
}

Complex cross_up_lt(const Component& comp, double x, Complex z, double s) {
  return cross_up_lt(Resolvent(comp, s), x, z);
}

TwoSidedExit exit_interval_lt(const Resolvent& res, double x, double d, Complex z) {
  if (!(d > 0.0)) throw std::invalid_argument("exit_interval_lt: d must be > 0");
  if (x < 0.0 || x > d) throw std::invalid_argument("exit_interval_lt: x must be in [0, d]");
  const double down = res(d - x) / res(d);
  const Complex up = cross_up_lt(res, d - x, z) - down * cross_up_lt(res, d, z);
  return {down, up};
}

TwoSidedExit exit_interval_lt(const Component& comp, double x, double d, Complex z, double s) {
  return exit_interval_lt(Resolvent(comp, s), x, d, z);
}

OscFunctionals::OscFunctionals(const OscillatingModel& model, double s, InversionConfig cfg)
    : kq_(model, s, cfg) {}

double OscFunctionals::passage_down(double x, double r) const {
  const double b = kq_.switch_level();
  if (!(r <= std::min(x, b)))
    throw std::invalid_argument("OscFunctionals::passage_down: requires r <= min(x, b)");
  const double c2 = kq_.resolvent2().cramer_root();
  const Complex num = kq_.resolvent1().c_factor(c2, b - x);
  const Complex den = kq_.resolvent1().c_factor(c2, b - r);
  return (num / den).real();
}

Complex OscFunctionals::cross_up(double x, double k, Complex z) const {
  const double b = kq_.switch_level();
  if (!(k >= std::max(x, b)))
    throw std::invalid_argument("OscFunctionals::cross_up: requires k >= max(x, b)");
  if (kq_.s() < 1e-6)
    throw std::invalid_argument(
        "OscFunctionals::cross_up: s below 1e-6 is ill-conditioned (s/c1(s) term); use the "
        "diffusion-limit formulas");
  const double d2 = k - b;
  const double xa = b - x;
  const auto kp = kq_.k_pack(xa, d2);
  const auto fp = kq_.f_pack(d2);
  const double ratio = kp.at_upper / fp.at_upper;
  if (z == Complex(0.0))
    return Complex(kq_.k_frak0(kp, xa) - ratio * kq_.f_frak0(fp));
  return kq_.k_frak(kp, xa, z) - ratio * kq_.f_frak(fp, z);
}

TwoSidedExit OscFunctionals::exit_interval(double x, double B, Complex z) const {
  const double b = kq_.switch_level();
  if (!(B > 0.0) || x < 0.0 || x > B || b < 0.0 || b > B)
    throw std::invalid_argument("OscFunctionals::exit_interval: requires x, b in [0, B]");
  const double d2 = B - b;
  const auto kpx = kq_.k_pack(b - x, d2);
  const auto kpb = x == 0.0 ? kpx : kq_.k_pack(b, d2);
  const double down = kpx.at_upper / kpb.at_upper;
  Complex up;
  if (z == Complex(0.0))
    up = Complex(kq_.k_frak0(kpx, b - x) - down * kq_.k_frak0(kpb, b));
  else
    up = kq_.k_frak(kpx, b - x, z) - down * kq_.k_frak(kpb, b, z);
  return {down, up};
}

double osc_passage_down_lt(const OscillatingModel& model, double x, double r, double s) {
  return OscFunctionals(model, s).passage_down(x, r);
}

Complex osc_cross_up_lt(const OscillatingModel& model, double x, double k, Complex z, double s) {
  return OscFunctionals(model, s).cross_up(x, k, z);
}

TwoSidedExit osc_exit_interval_lt(const OscillatingModel& model, double x, double B, Complex z,
                                  double s) {
  return OscFunctionals(model, s).exit_interval(x, B, z);
}

PrCheck verify_pecherskii_rogozin(const Component& comp, Complex z, double s, double p,
                                  double x_max) {
  const Resolvent res(comp, s);
  const double c = res.cramer_root();
  if (!(p > c))
    throw std::invalid_argument("verify_pecherskii_rogozin: requires p > c(s)");
  if (z == Complex(p))
    throw std::invalid_argument("verify_pecherskii_rogozin: requires p != z");
  const double tail = std::exp(-p * x_max) / p;
  if (tail > 1e-10) {
    std::ostringstream msg;
    msg << "verify_pecherskii_rogozin: tail bound e^{-p x_max}/p = " << tail
        << " exceeds 1e-10; increase x_max";
    throw std::runtime_error(msg.str());
  }

  const Complex lhs = adaptive_gk(
      [&](double x) { return std::exp(-p * x) * cross_up_lt(res, x, z); }, 0.0, x_max, 1e-12);
  const Complex rhs =
      (1.0 - res.cramer_deflated(z) / res.cramer_deflated(Complex(p))) / (p - z);
  return {lhs, rhs, std::abs(lhs - rhs)};
}

}  // namespace oscp
