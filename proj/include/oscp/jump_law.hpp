#pragma once

#include <complex>
#include <vector>

#include "oscp/polynomial.hpp"
#include "oscp/rng.hpp"

namespace oscp {

/// Positive jump-size distribution with a rational Laplace-Stieltjes
/// transform phi(z) = E e^{-z xi}. Supported families: Exponential(mu),
/// HyperExponential(p_j, mu_j), Erlang(n, mu). These are exactly the laws
/// for which every downstream transform is a ratio of polynomials, so exact
/// partial-fraction references exist for all of them.
class JumpLaw {
 public:
  enum class Kind { Exponential, HyperExponential, Erlang };

  static JumpLaw exponential(double mu);
  static JumpLaw hyper_exponential(std::vector<double> weights, std::vector<double> rates);
  static JumpLaw erlang(int shape, double mu);

  Kind kind() const { return kind_; }

  /// phi(z); requires Re(z) > analyticity_abscissa().
  Complex lst(Complex z) const;
  double lst(double z) const { return lst(Complex(z)).real(); }

  double mean() const { return m1_; }
  double second_moment() const { return m2_; }

  /// phi is analytic for Re(z) > this value (= -min rate).
  double analyticity_abscissa() const { return -min_rate_; }

  /// phi(z) = num(z)/den(z) with den = prod (z + mu_j).
  const Polynomial& lst_numerator() const { return num_; }
  const Polynomial& lst_denominator() const { return den_; }

  double sample(Rng& rng) const;

  // parameter access (Exponential/Erlang: rates().front())
  const std::vector<double>& weights() const { return weights_; }
  const std::vector<double>& rates() const { return rates_; }
  int shape() const { return shape_; }

 private:
  JumpLaw() = default;

  Kind kind_ = Kind::Exponential;
  std::vector<double> weights_;  // hyper-exponential mixing probabilities
  std::vector<double> rates_;
  int shape_ = 1;                // Erlang shape
  double m1_ = 0.0, m2_ = 0.0, min_rate_ = 0.0;
  Polynomial num_, den_;
};

}  // namespace oscp
