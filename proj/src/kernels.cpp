#include "oscp/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "oscp/quadrature.hpp"

namespace oscp {

KernelEvaluator::KernelEvaluator(const OscillatingModel& model, double s, InversionConfig cfg)
    : s_(s),
      b_(model.switch_level),
      r1_(model.comp1, s),
      r2_(model.comp2, s),
      abscissa_(std::max(r1_.cramer_root(), r2_.cramer_root())),
      cfg_(cfg) {}

Complex KernelEvaluator::k_transform(double x, Complex z) const {
  if (x <= 0.0) return std::exp(x * z) * r2_.transform(z);
  // (k1(z)-s) sum_j res_j e^{zeta_j x} / (z - zeta_j), each term through the
  // exact deflation of the numerator of k1 - s, then divided by k2(z)-s.
  Complex acc = 0.0;
  const auto& poles = r1_.poles();
  const auto& res = r1_.residues();
  for (size_t j = 0; j < poles.size(); ++j)
    acc += res[j] * std::exp(poles[j] * x) * r1_.pole_deflated(j, z);
  return acc * r2_.transform(z);
}

Complex KernelEvaluator::f_transform(Complex z) const {
  return r1_.cramer_deflated(z) * r2_.transform(z);
}

double KernelEvaluator::k_kernel_inverted(double x, double u) const {
  if (x <= 0.0) {
    // the transform factors as e^{xz} / (k2(z)-s): a pure delay of the
    // component-2 resolvent; invert the proper part at the shifted time
    // (contour engines cannot absorb the e^{xz} growth themselves)
    return invert([this](Complex z) { return r2_.transform(z); }, abscissa_, u + x, cfg_);
  }
  return invert([this, x](Complex z) { return k_transform(x, z); }, abscissa_, u, cfg_);
}

double KernelEvaluator::k_kernel(double x, double u) const {
  if (u < 0.0) throw std::invalid_argument("KernelEvaluator::k_kernel: u must be >= 0");
  if (x <= 0.0) return r2_(x + u);
  if (u == 0.0) return r1_(x) * r1_.component().drift() / r2_.component().drift();
  return k_kernel_inverted(x, u);
}

double KernelEvaluator::f_kernel_inverted(double u) const {
  return invert([this](Complex z) { return f_transform(z); }, abscissa_, u, cfg_);
}

double KernelEvaluator::f_kernel(double u) const {
  if (u < 0.0) throw std::invalid_argument("KernelEvaluator::f_kernel: u must be >= 0");
  if (u == 0.0) return r1_.component().drift() / r2_.component().drift();
  return f_kernel_inverted(u);
}

KernelEvaluator::QuadPack KernelEvaluator::k_pack(double x, double upper) const {
  QuadPack p;
  p.upper = upper;
  p.at_upper = k_kernel(x, upper);
  // K_x vanishes on [0, -x) when x < 0; start the rule at the kink.
  const double lo = x < 0.0 ? std::min(-x, upper) : 0.0;
  if (upper > lo) {
    composite_gauss8_nodes(lo, upper, 8, p.nodes, p.weights);
    p.values.reserve(p.nodes.size());
    for (double v : p.nodes) p.values.push_back(k_kernel(x, v));
  }
  return p;
}

KernelEvaluator::QuadPack KernelEvaluator::f_pack(double upper) const {
  QuadPack p;
  p.upper = upper;
  p.at_upper = f_kernel(upper);
  if (upper > 0.0) {
    composite_gauss8_nodes(0.0, upper, 8, p.nodes, p.weights);
    p.values.reserve(p.nodes.size());
    for (double v : p.nodes) p.values.push_back(f_kernel(v));
  }
  return p;
}

double KernelEvaluator::pack_integral(const QuadPack& p) {
  double acc = 0.0;
  for (size_t i = 0; i < p.nodes.size(); ++i) acc += p.weights[i] * p.values[i];
  return acc;
}

Complex KernelEvaluator::pack_weighted_integral(const QuadPack& p, Complex z) {
  Complex acc = 0.0;
  for (size_t i = 0; i < p.nodes.size(); ++i)
    acc += p.weights[i] * std::exp(-z * p.nodes[i]) * p.values[i];
  return acc;
}

Complex KernelEvaluator::k_frak(const QuadPack& kp, double x, Complex z) const {
  return std::exp(kp.upper * z) *
         (r1_.c_factor(z, x) - r2_.exponent_minus_s(z) * pack_weighted_integral(kp, z));
}

Complex KernelEvaluator::k_frak(double x, double u, Complex z) const {
  if (u < 0.0) throw std::invalid_argument("KernelEvaluator::k_frak: u must be >= 0");
  return k_frak(k_pack(x, u), x, z);
}

double KernelEvaluator::k_frak0(const QuadPack& kp, double x) const {
  return 1.0 + s_ * r1_.integral0(x) + s_ * pack_integral(kp);
}

double KernelEvaluator::k_frak0(double x, double u) const {
  if (u < 0.0) throw std::invalid_argument("KernelEvaluator::k_frak0: u must be >= 0");
  return k_frak0(k_pack(x, u), x);
}

Complex KernelEvaluator::f_frak(const QuadPack& fp, Complex z) const {
  return std::exp(fp.upper * z) *
         (r1_.cramer_deflated(z) - r2_.exponent_minus_s(z) * pack_weighted_integral(fp, z));
}

double KernelEvaluator::f_frak0(const QuadPack& fp) const {
  return s_ / r1_.cramer_root() + s_ * pack_integral(fp);
}

}  // namespace oscp
