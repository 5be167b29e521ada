#pragma once

#include <complex>
#include <vector>

namespace oscp {

using Complex = std::complex<double>;

/// Dense univariate polynomial with real coefficients, stored ascending
/// (coeffs[k] multiplies z^k). Trailing zero coefficients are trimmed.
class Polynomial {
 public:
  Polynomial() : coeffs_{0.0} {}
  explicit Polynomial(std::vector<double> ascending);
  static Polynomial constant(double c) { return Polynomial({c}); }

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<double>& coeffs() const { return coeffs_; }
  double leading() const { return coeffs_.back(); }

  double operator()(double z) const;
  Complex operator()(Complex z) const;

  Polynomial derivative() const;
  Polynomial operator*(const Polynomial& rhs) const;
  Polynomial operator+(const Polynomial& rhs) const;
  Polynomial operator-(const Polynomial& rhs) const;
  Polynomial scaled(double f) const;

  /// All complex roots, via the companion-matrix eigenvalues followed by a
  /// Newton polish on this polynomial. Degree 0 yields an empty list.
  std::vector<Complex> roots() const;

 private:
  std::vector<double> coeffs_;
};

/// Polynomial with complex coefficients (ascending); used for single-root
/// deflations N(z)/(z - root) of real polynomials at complex roots.
class CPolynomial {
 public:
  CPolynomial() : coeffs_{Complex(0.0)} {}
  explicit CPolynomial(std::vector<Complex> ascending) : coeffs_(std::move(ascending)) {}

  Complex operator()(Complex z) const;
  const std::vector<Complex>& coeffs() const { return coeffs_; }

  /// Synthetic division: quotient of p by (z - root). The remainder (which
  /// ought to be ~0 when root is a root of p) is discarded.
  static CPolynomial deflate(const Polynomial& p, Complex root);

 private:
  std::vector<Complex> coeffs_;
};

}  // namespace oscp
