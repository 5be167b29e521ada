#pragma once

#include <array>
#include <cmath>
#include <functional>
#include <stdexcept>
#include <vector>

namespace oscp {

namespace quad_detail {

// 8-point Gauss-Legendre nodes/weights on [-1, 1] (positive half; symmetric).
inline constexpr std::array<double, 4> kGL8Nodes = {
    0.1834346424956498, 0.5255324099163290, 0.7966664774136267, 0.9602898564975363};
inline constexpr std::array<double, 4> kGL8Weights = {
    0.3626837833783620, 0.3137066458778873, 0.2223810344533745, 0.1012285362903763};

// Gauss-Kronrod 7/15 nodes and weights (QUADPACK dqk15).
inline constexpr std::array<double, 8> kGK15Nodes = {
    0.9914553711208126, 0.9491079123427585, 0.8648644233597691, 0.7415311855993944,
    0.5860872354676911, 0.4058451513773972, 0.2077849550078985, 0.0};
inline constexpr std::array<double, 8> kGK15Weights = {
    0.0229353220105292, 0.0630920926299786, 0.1047900103222502, 0.1406532597155259,
    0.1690047266392679, 0.1903505780647854, 0.2044329400752989, 0.2094821410847278};
inline constexpr std::array<double, 4> kG7Weights = {
    0.1294849661688697, 0.2797053914892767, 0.3818300505051189, 0.4179591836734694};

}  // namespace quad_detail

/// Abscissas/weights of an n-panel composite 8-point Gauss rule on [a, b].
inline void composite_gauss8_nodes(double a, double b, int panels,
                                   std::vector<double>& nodes, std::vector<double>& weights) {
  nodes.clear();
  weights.clear();
  if (!(b > a)) return;
  const double h = (b - a) / panels;
  for (int p = 0; p < panels; ++p) {
    const double mid = a + (p + 0.5) * h;
    const double half = 0.5 * h;
    for (int k = 0; k < 4; ++k) {
      nodes.push_back(mid - half * quad_detail::kGL8Nodes[k]);
      weights.push_back(half * quad_detail::kGL8Weights[k]);
      nodes.push_back(mid + half * quad_detail::kGL8Nodes[k]);
      weights.push_back(half * quad_detail::kGL8Weights[k]);
    }
  }
}

/// Composite 8-point Gauss quadrature of f over [a, b].
template <typename F>
auto composite_gauss8(F&& f, double a, double b, int panels) -> decltype(f(a)) {
  using R = decltype(f(a));
  R acc{};
  if (!(b > a)) return acc;
  std::vector<double> nodes, weights;
  composite_gauss8_nodes(a, b, panels, nodes, weights);
  for (size_t i = 0; i < nodes.size(); ++i) acc += weights[i] * f(nodes[i]);
  return acc;
}

/// Adaptive Gauss-Kronrod 7/15 quadrature with absolute tolerance. Works for
/// real- or complex-valued integrands on a finite interval.
template <typename F>
auto adaptive_gk(F&& f, double a, double b, double abs_tol, int max_depth = 15)
    -> decltype(f(a)) {
  using R = decltype(f(a));
  struct Seg {
    double a, b, tol;
    int depth;
  };
  auto gk15 = [&f](double lo, double hi, double& err) -> R {
    const double mid = 0.5 * (lo + hi), half = 0.5 * (hi - lo);
    R kron{};
    R gauss{};
    for (int k = 0; k < 8; ++k) {
      const double dx = half * quad_detail::kGK15Nodes[k];
      R fv = f(mid - dx);
      if (quad_detail::kGK15Nodes[k] != 0.0) fv += f(mid + dx);
      kron += quad_detail::kGK15Weights[k] * fv;
      if (k % 2 == 1) gauss += quad_detail::kG7Weights[k / 2] * fv;
    }
    kron *= half;
    gauss *= half;
    err = std::abs(kron - gauss);
    return kron;
  };

  R total{};
  std::vector<Seg> stack{{a, b, abs_tol, 0}};
  while (!stack.empty()) {
    const Seg s = stack.back();
    stack.pop_back();
    double err = 0.0;
    const R val = gk15(s.a, s.b, err);
    if (err <= s.tol || s.depth >= max_depth) {
      total += val;
    } else {
      const double mid = 0.5 * (s.a + s.b);
      stack.push_back({s.a, mid, 0.5 * s.tol, s.depth + 1});
      stack.push_back({mid, s.b, 0.5 * s.tol, s.depth + 1});
    }
  }
  return total;
}

}  // namespace oscp
