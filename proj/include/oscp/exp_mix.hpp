#pragma once

#include <cmath>
#include <complex>
#include <vector>

namespace oscp {

/// (e^{w x} - 1) / w with a series fallback near w = 0.
inline std::complex<double> expm1_over(std::complex<double> w, double x) {
  const std::complex<double> wx = w * x;
  if (std::abs(wx) < 1e-4) {
    // x (1 + wx/2 + wx^2/6 + wx^3/24), relative error < 1e-17 for |wx| < 1e-4
    return x * (1.0 + wx * (0.5 + wx * (1.0 / 6.0 + wx / 24.0)));
  }
  return (std::exp(wx) - 1.0) / w;
}

/// Finite mixture of complex exponentials f(u) = sum_j w_j e^{theta_j u}.
/// Real-valued mixtures carry conjugate term pairs; evaluation returns the
/// real part. All integrals are exact antiderivatives.
class ExpMix {
 public:
  struct Term {
    std::complex<double> weight;
    std::complex<double> rate;
  };

  ExpMix() = default;
  explicit ExpMix(std::vector<Term> terms) : terms_(std::move(terms)) {}

  const std::vector<Term>& terms() const { return terms_; }

  double operator()(double u) const {
    std::complex<double> acc = 0.0;
    for (const Term& t : terms_) acc += t.weight * std::exp(t.rate * u);
    return acc.real();
  }

  /// int_0^x f(u) du (0 for x <= 0).
  double integral0(double x) const {
    if (x <= 0.0) return 0.0;
    std::complex<double> acc = 0.0;
    for (const Term& t : terms_) acc += t.weight * expm1_over(t.rate, x);
    return acc.real();
  }

  /// int_0^x e^{-u z} f(u) du (0 for x <= 0).
  std::complex<double> weighted_integral(double x, std::complex<double> z) const {
    if (x <= 0.0) return 0.0;
    std::complex<double> acc = 0.0;
    for (const Term& t : terms_) acc += t.weight * expm1_over(t.rate - z, x);
    return acc;
  }

  /// sum_j w_j e^{theta_j shift} / (z - theta_j); for shift >= 0 this is the
  /// rational continuation of int_0^inf e^{-u z} f(shift + u) du.
  std::complex<double> shifted_laplace(double shift, std::complex<double> z) const {
    std::complex<double> acc = 0.0;
    for (const Term& t : terms_) acc += t.weight * std::exp(t.rate * shift) / (z - t.rate);
    return acc;
  }

 private:
  std::vector<Term> terms_;
};

}  // namespace oscp
