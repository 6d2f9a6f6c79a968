#include "morley/quadrature.hpp"

#include <cmath>
#include <stdexcept>

namespace morley {

namespace {

// Legendre P_n and P_n' at x by the three-term recurrence.
void legendre(int n, double x, double& p, double& dp) {
  double p0 = 1.0, p1 = x;
  for (int k = 2; k <= n; ++k) {
    const double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
    p0 = p1;
    p1 = p2;
  }
  p = p1;
  dp = n * (x * p1 - p0) / (x * x - 1.0);
}

} // namespace

QuadRule gauss_rule(int order) {
  if (order < 1 || order > 16) throw std::invalid_argument("gauss_rule: order must be in [1,16]");

  QuadRule rule;
  rule.nodes.resize(order);
  rule.weights.resize(order);
  if (order == 1) {
    rule.nodes(0) = 0.0;
    rule.weights(0) = 2.0;
    return rule;
  }

  const int half = (order + 1) / 2;
  for (int i = 0; i < half; ++i) {
    // Chebyshev-based initial guess, then Newton on P_n.
    double x = -std::cos(M_PI * (i + 0.75) / (order + 0.5));
    double p, dp;
    for (int it = 0; it < 100; ++it) {
      legendre(order, x, p, dp);
      const double step = p / dp;
      x -= step;
      if (std::abs(step) < 1e-16) break;
    }
    legendre(order, x, p, dp);
    rule.nodes(i) = x;
    rule.nodes(order - 1 - i) = -x;
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule.weights(i) = w;
    rule.weights(order - 1 - i) = w;
  }
  if (order % 2 == 1) rule.nodes(half - 1) = 0.0;
  return rule;
}

} // namespace morley
