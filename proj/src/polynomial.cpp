#include "oscp/polynomial.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace oscp {

namespace {

void trim(std::vector<double>& c) {
  while (c.size() > 1 && c.back() == 0.0) c.pop_back();
}

}  // namespace

Polynomial::Polynomial(std::vector<double> ascending) : coeffs_(std::move(ascending)) {
  if (coeffs_.empty()) coeffs_.push_back(0.0);
  trim(coeffs_);
}

double Polynomial::operator()(double z) const {
  double r = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) r = r * z + *it;
  return r;
}

Complex Polynomial::operator()(Complex z) const {
  Complex r = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) r = r * z + *it;
  return r;
}

Polynomial Polynomial::derivative() const {
  if (coeffs_.size() == 1) return Polynomial({0.0});
  std::vector<double> d(coeffs_.size() - 1);
  for (size_t k = 1; k < coeffs_.size(); ++k) d[k - 1] = coeffs_[k] * static_cast<double>(k);
  return Polynomial(std::move(d));
}

Polynomial Polynomial::operator*(const Polynomial& rhs) const {
  std::vector<double> out(coeffs_.size() + rhs.coeffs_.size() - 1, 0.0);
  for (size_t i = 0; i < coeffs_.size(); ++i)
    for (size_t j = 0; j < rhs.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * rhs.coeffs_[j];
  return Polynomial(std::move(out));
}

Polynomial Polynomial::operator+(const Polynomial& rhs) const {
  std::vector<double> out(std::max(coeffs_.size(), rhs.coeffs_.size()), 0.0);
  for (size_t i = 0; i < coeffs_.size(); ++i) out[i] += coeffs_[i];
  for (size_t i = 0; i < rhs.coeffs_.size(); ++i) out[i] += rhs.coeffs_[i];
  return Polynomial(std::move(out));
}

Polynomial Polynomial::operator-(const Polynomial& rhs) const {
  return *this + rhs.scaled(-1.0);
}

Polynomial Polynomial::scaled(double f) const {
  std::vector<double> out = coeffs_;
  for (double& c : out) c *= f;
  return Polynomial(std::move(out));
}

std::vector<Complex> Polynomial::roots() const {
  const int n = degree();
  if (n <= 0) return {};
  if (leading() == 0.0) throw std::invalid_argument("Polynomial::roots: zero leading coefficient");

  std::vector<Complex> out;
  if (n == 1) {
    out.push_back(Complex(-coeffs_[0] / coeffs_[1]));
  } else if (n == 2) {
    // stable quadratic formula
    const double a = coeffs_[2], b = coeffs_[1], c = coeffs_[0];
    const Complex disc = std::sqrt(Complex(b * b - 4.0 * a * c));
    const Complex q = -0.5 * (b + (b >= 0.0 ? 1.0 : -1.0) * disc);
    if (std::abs(q) > 0.0) {
      out.push_back(q / a);
      out.push_back(c / q);
    } else {
      out.push_back(Complex(0.0));
      out.push_back(Complex(0.0));
    }
  } else {
    Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(n, n);
    for (int i = 0; i < n; ++i) companion(i, n - 1) = -coeffs_[i] / coeffs_[n];
    for (int i = 1; i < n; ++i) companion(i, i - 1) = 1.0;
    Eigen::EigenSolver<Eigen::MatrixXd> solver(companion, /*computeEigenvectors=*/false);
    if (solver.info() != Eigen::Success)
      throw std::runtime_error("Polynomial::roots: eigenvalue iteration failed");
    for (int i = 0; i < n; ++i) out.push_back(solver.eigenvalues()[i]);
  }

  // Newton polish; companion eigenvalues are accurate but a few steps tighten
  // residuals to machine level for the simple roots we deal with.
  const Polynomial der = derivative();
  for (Complex& r : out) {
    for (int it = 0; it < 4; ++it) {
      const Complex fp = der(r);
      if (std::abs(fp) == 0.0) break;
      const Complex step = (*this)(r) / fp;
      r -= step;
      if (std::abs(step) < 1e-15 * (1.0 + std::abs(r))) break;
    }
    if (std::abs(r.imag()) < 1e-12 * (1.0 + std::abs(r.real()))) r = Complex(r.real());
  }
  std::sort(out.begin(), out.end(), [](Complex a, Complex b) {
    if (a.real() != b.real()) return a.real() < b.real();
    return a.imag() < b.imag();
  });
  return out;
}

Complex CPolynomial::operator()(Complex z) const {
  Complex r = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) r = r * z + *it;
  return r;
}

CPolynomial CPolynomial::deflate(const Polynomial& p, Complex root) {
  const auto& a = p.coeffs();
  const int n = p.degree();
  if (n < 1) throw std::invalid_argument("CPolynomial::deflate: degree < 1");
  std::vector<Complex> q(static_cast<size_t>(n), Complex(0.0));
  Complex carry = a[static_cast<size_t>(n)];
  for (int k = n - 1; k >= 0; --k) {
    q[static_cast<size_t>(k)] = carry;
    carry = a[static_cast<size_t>(k)] + root * carry;
  }
  return CPolynomial(std::move(q));
}

}  // namespace oscp
