#pragma once

// Self-contained partial-fraction reference for models whose two components
// both have Exponential jumps. Everything here is written out with explicit
// quadratic formulas, independent of the library's transform-inversion and
// deflation paths, so it can serve as the second route in dual-route checks.

#include <array>
#include <cmath>
#include <complex>
#include <vector>

namespace oracle {

using C = std::complex<double>;

// one spectrally positive component with Exponential(mu) jumps:
// k(z) - s = N(z)/Q(z), N = a z^2 + (a mu - lam - s) z - s mu, Q = z + mu.
struct ExpComp {
  double a, lam, mu, s;
  double zp, zm;  // roots of N (zp > 0 is the Cramer root)

  ExpComp(double a_, double lam_, double mu_, double s_) : a(a_), lam(lam_), mu(mu_), s(s_) {
    const double bq = a * mu - lam - s, cq = -s * mu;
    const double disc = std::sqrt(bq * bq - 4.0 * a * cq);
    zp = (-bq + disc) / (2.0 * a);
    zm = (-bq - disc) / (2.0 * a);
  }

  double N(double z) const { return a * z * z + (a * mu - lam - s) * z - s * mu; }
  C N(C z) const { return a * z * z + (a * mu - lam - s) * z - s * mu; }
  C Np(C z) const { return 2.0 * a * z + (a * mu - lam - s); }
  C Q(C z) const { return z + mu; }

  // residues of Q/N at zp, zm
  double res_p() const { return (zp + mu) / (2.0 * a * zp + (a * mu - lam - s)); }
  double res_m() const { return (zm + mu) / (2.0 * a * zm + (a * mu - lam - s)); }

  double R(double x) const {
    if (x < 0.0) return 0.0;
    return res_p() * std::exp(zp * x) + res_m() * std::exp(zm * x);
  }
  double intR(double x) const {  // int_0^x R
    if (x <= 0.0) return 0.0;
    return res_p() * (std::exp(zp * x) - 1.0) / zp + res_m() * (std::exp(zm * x) - 1.0) / zm;
  }
};

// kernels of the switching pair (comp1 below, comp2 above), exponential jumps
// on both sides: K_x and F as explicit three-pole exponential mixtures.
struct TwoExpKernels {
  ExpComp c1, c2;

  TwoExpKernels(const ExpComp& c1_, const ExpComp& c2_) : c1(c1_), c2(c2_) {}

  // sum_j res1_j e^{zeta_j x} / (z - zeta_j)
  C shifted(double x, C z) const {
    return c1.res_p() * std::exp(c1.zp * x) / (z - c1.zp) +
           c1.res_m() * std::exp(c1.zm * x) / (z - c1.zm);
  }

  // poles of both kernels: -mu1 and the roots of N2
  std::array<double, 3> poles() const { return {-c1.mu, c2.zp, c2.zm}; }

  // K_x as sum of residue * e^{pole u} over the three poles (x > 0)
  std::array<double, 3> k_residues(double x) const {
    const double m1 = -c1.mu;
    const double r_mu = (c1.N(m1) * c2.Q(C(m1)) / (1.0 * c2.N(C(m1)))).real() *
                        shifted(x, C(m1)).real();
    const double r_zp = (c1.N(c2.zp) * (c2.zp + c2.mu) / ((c2.zp + c1.mu) * c2.Np(c2.zp))).real() *
                        shifted(x, C(c2.zp)).real();
    const double r_zm = (c1.N(c2.zm) * (c2.zm + c2.mu) / ((c2.zm + c1.mu) * c2.Np(c2.zm))).real() *
                        shifted(x, C(c2.zm)).real();
    return {r_mu, r_zp, r_zm};
  }

  double K(double x, double u) const {
    if (x <= 0.0) return c2.R(x + u);
    const auto res = k_residues(x);
    const auto pol = poles();
    double acc = 0.0;
    for (int i = 0; i < 3; ++i) acc += res[i] * std::exp(pol[i] * u);
    return acc;
  }

  // F as a three-pole mixture from a1 (z - zm1) Q2 / (Q1 N2)
  std::array<double, 3> f_residues() const {
    const double m1 = -c1.mu;
    const double r_mu = c1.a * (m1 - c1.zm) * (m1 + c2.mu) / (1.0 * c2.N(C(m1)).real());
    const double r_zp =
        c1.a * (c2.zp - c1.zm) * (c2.zp + c2.mu) / ((c2.zp + c1.mu) * c2.Np(c2.zp).real());
    const double r_zm =
        c1.a * (c2.zm - c1.zm) * (c2.zm + c2.mu) / ((c2.zm + c1.mu) * c2.Np(c2.zm).real());
    return {r_mu, r_zp, r_zm};
  }

  double F(double u) const {
    const auto res = f_residues();
    const auto pol = poles();
    double acc = 0.0;
    for (int i = 0; i < 3; ++i) acc += res[i] * std::exp(pol[i] * u);
    return acc;
  }
};

}  // namespace oracle
