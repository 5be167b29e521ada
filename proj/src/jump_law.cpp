#include "oscp/jump_law.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace oscp {

JumpLaw JumpLaw::exponential(double mu) {
  if (!(mu > 0.0)) throw std::invalid_argument("JumpLaw::exponential: mu must be > 0");
  JumpLaw law;
  law.kind_ = Kind::Exponential;
  law.rates_ = {mu};
  law.m1_ = 1.0 / mu;
  law.m2_ = 2.0 / (mu * mu);
  law.min_rate_ = mu;
  law.num_ = Polynomial({mu});
  law.den_ = Polynomial({mu, 1.0});
  return law;
}

JumpLaw JumpLaw::hyper_exponential(std::vector<double> weights, std::vector<double> rates) {
  if (weights.empty() || weights.size() != rates.size())
    throw std::invalid_argument("JumpLaw::hyper_exponential: weights/rates size mismatch");
  double wsum = 0.0;
  for (double w : weights) {
    if (!(w > 0.0)) throw std::invalid_argument("JumpLaw::hyper_exponential: weights must be > 0");
    wsum += w;
  }
  if (std::abs(wsum - 1.0) > 1e-9)
    throw std::invalid_argument("JumpLaw::hyper_exponential: weights must sum to 1");
  for (double mu : rates)
    if (!(mu > 0.0)) throw std::invalid_argument("JumpLaw::hyper_exponential: rates must be > 0");

  JumpLaw law;
  law.kind_ = Kind::HyperExponential;
  law.weights_ = std::move(weights);
  law.rates_ = std::move(rates);
  law.m1_ = law.m2_ = 0.0;
  for (size_t j = 0; j < law.rates_.size(); ++j) {
    law.m1_ += law.weights_[j] / law.rates_[j];
    law.m2_ += 2.0 * law.weights_[j] / (law.rates_[j] * law.rates_[j]);
  }
  law.min_rate_ = *std::min_element(law.rates_.begin(), law.rates_.end());
  // den = prod (z + mu_j); num = sum p_j mu_j prod_{i != j} (z + mu_i)
  Polynomial den({1.0});
  for (double mu : law.rates_) den = den * Polynomial({mu, 1.0});
  Polynomial num({0.0});
  for (size_t j = 0; j < law.rates_.size(); ++j) {
    Polynomial part({law.weights_[j] * law.rates_[j]});
    for (size_t i = 0; i < law.rates_.size(); ++i)
      if (i != j) part = part * Polynomial({law.rates_[i], 1.0});
    num = num + part;
  }
  law.num_ = num;
  law.den_ = den;
  return law;
}

JumpLaw JumpLaw::erlang(int shape, double mu) {
  if (shape < 1) throw std::invalid_argument("JumpLaw::erlang: shape must be >= 1");
  if (!(mu > 0.0)) throw std::invalid_argument("JumpLaw::erlang: mu must be > 0");
  JumpLaw law;
  law.kind_ = Kind::Erlang;
  law.shape_ = shape;
  law.rates_ = {mu};
  law.m1_ = shape / mu;
  law.m2_ = static_cast<double>(shape) * (shape + 1) / (mu * mu);
  law.min_rate_ = mu;
  Polynomial den({1.0});
  for (int i = 0; i < shape; ++i) den = den * Polynomial({mu, 1.0});
  law.num_ = Polynomial({std::pow(mu, shape)});
  law.den_ = den;
  return law;
}

Complex JumpLaw::lst(Complex z) const {
  if (z.real() <= analyticity_abscissa())
    throw std::domain_error("JumpLaw::lst: z outside analyticity region Re(z) > -min(mu)");
  switch (kind_) {
    case Kind::Exponential:
      return rates_[0] / (rates_[0] + z);
    case Kind::HyperExponential: {
      Complex acc = 0.0;
      for (size_t j = 0; j < rates_.size(); ++j) acc += weights_[j] * rates_[j] / (rates_[j] + z);
      return acc;
    }
    case Kind::Erlang:
      return std::pow(rates_[0] / (rates_[0] + z), shape_);
  }
  return 0.0;  // unreachable
}

double JumpLaw::sample(Rng& rng) const {
  switch (kind_) {
    case Kind::Exponential:
      return rng.exponential(rates_[0]);
    case Kind::HyperExponential: {
      double u = rng.uniform();
      for (size_t j = 0; j + 1 < weights_.size(); ++j) {
        if (u < weights_[j]) return rng.exponential(rates_[j]);
        u -= weights_[j];
      }
      return rng.exponential(rates_.back());
    }
    case Kind::Erlang: {
      double acc = 0.0;
      for (int i = 0; i < shape_; ++i) acc += rng.exponential(rates_[0]);
      return acc;
    }
  }
  return 0.0;  // unreachable
}

}  // namespace oscp
