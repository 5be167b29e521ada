#include "oscp/inversion.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace oscp {

namespace {

constexpr double kPi = std::numbers::pi;

[[noreturn]] void report_bad_node(const char* method, int node, std::complex<double> z,
                                  std::complex<double> value) {
  std::ostringstream msg;
  msg << method << ": non-finite transform value at node " << node << ", z = (" << z.real()
      << ", " << z.imag() << "), value = (" << value.real() << ", " << value.imag()
      << "); contour likely too close to a singularity";
  throw std::runtime_error(msg.str());
}

void check_finite(const char* method, int node, std::complex<double> z,
                  std::complex<double> value) {
  if (!std::isfinite(value.real()) || !std::isfinite(value.imag()))
    report_bad_node(method, node, z, value);
}

// Fixed-Talbot rule (Abate/Valko) applied to G(z) = transform(z + gamma),
// whose singularities lie strictly left of the imaginary axis. The contour
// radius is capped at its 32-node value: term magnitudes grow like e^{r t},
// so scaling r with M past that point only amplifies roundoff; extra nodes
// refine the trapezoid rule on the capped contour instead.
double talbot(const TransformFn& transform, double gamma, double t, int M) {
  const double r = 2.0 * std::min(M, 32) / (5.0 * t);
  std::complex<double> acc = 0.5 * std::exp(r * t) * transform(gamma + r);
  check_finite("FixedTalbot", 0, gamma + r, acc);
  for (int k = 1; k < M; ++k) {
    const double theta = k * kPi / M;
    const double cot = std::cos(theta) / std::sin(theta);
    const std::complex<double> z(r * theta * cot, r * theta);
    const double sigma = theta + (theta * cot - 1.0) * cot;
    const std::complex<double> fz = transform(gamma + z);
    check_finite("FixedTalbot", k, gamma + z, fz);
    acc += std::exp(z * t) * fz * std::complex<double>(1.0, sigma);
  }
  return std::exp(gamma * t) * (r / M) * acc.real();
}

// Abate-Whitt Euler algorithm on G(z) = transform(z + gamma): alternating
// series from the Bromwich line at A/(2t), accelerated by binomial averaging
// of the last m partial sums. The shift makes the hidden original decay, so
// the aliasing error is ~ e^{-A} regardless of the growth of f itself.
double euler(const TransformFn& transform, double gamma, double t, int node_count) {
  const double A = 23.5;  // aliasing ~ e^{-A} ~ 6e-11; roundoff ~ e^{A/2} eps
  const int m = node_count / 2;
  const int n = node_count - m;

  const int terms = n + m;
  std::vector<double> partial(static_cast<size_t>(terms) + 1);
  const std::complex<double> z0(A / (2.0 * t), 0.0);
  std::complex<double> f0 = transform(gamma + z0);
  check_finite("EulerSummation", 0, gamma + z0, f0);
  double sum = 0.5 * f0.real();
  partial[0] = sum;
  for (int k = 1; k <= terms; ++k) {
    const std::complex<double> z(A / (2.0 * t), k * kPi / t);
    const std::complex<double> fz = transform(gamma + z);
    check_finite("EulerSummation", k, gamma + z, fz);
    sum += (k % 2 == 0 ? 1.0 : -1.0) * fz.real();
    partial[static_cast<size_t>(k)] = sum;
  }

  // binomial average of partial sums n .. n+m
  double avg = 0.0;
  double binom = 1.0;  // C(m, j) built incrementally
  double norm = std::pow(2.0, m);
  for (int j = 0; j <= m; ++j) {
    avg += binom * partial[static_cast<size_t>(n + j)];
    binom = binom * (m - j) / (j + 1.0);
  }
  avg /= norm;
  return std::exp(gamma * t) * std::exp(A / 2.0) / t * avg;
}

}  // namespace

double invert(const TransformFn& transform, double abscissa, double t,
              const InversionConfig& cfg) {
  if (cfg.node_count < 8) throw std::invalid_argument("invert: node_count must be >= 8");
  if (cfg.method == InversionMethod::EulerSummation && cfg.node_count % 2 != 0)
    throw std::invalid_argument("invert: node_count must be even for EulerSummation");
  if (t <= 0.0) return 0.0;

  const double gamma = abscissa + std::max(1.0, abscissa) * 0.1 + cfg.abscissa_shift;
  switch (cfg.method) {
    case InversionMethod::FixedTalbot:
      return talbot(transform, gamma, t, cfg.node_count);
    case InversionMethod::EulerSummation:
      return euler(transform, gamma, t, cfg.node_count);
  }
  throw std::logic_error("invert: unknown method");
}

std::vector<double> invert_grid(const TransformFn& transform, double abscissa,
                                const std::vector<double>& points, const InversionConfig& cfg) {
  for (size_t i = 1; i < points.size(); ++i)
    if (!(points[i] > points[i - 1]))
      throw std::invalid_argument("invert_grid: points must be strictly increasing");
  std::vector<double> out;
  out.reserve(points.size());
  for (double t : points) out.push_back(invert(transform, abscissa, t, cfg));
  return out;
}

}  // namespace oscp
