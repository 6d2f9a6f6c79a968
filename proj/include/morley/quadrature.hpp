#pragma once

#include <Eigen/Core>

namespace morley {

/// Gauss-Legendre rule on [-1,1]: weights sum to 2; an n-point rule
/// integrates polynomials of degree <= 2n-1 exactly.
struct QuadRule {
  Eigen::VectorXd nodes;
  Eigen::VectorXd weights;

  int size() const { return static_cast<int>(nodes.size()); }
};

/// n-point Gauss-Legendre rule, 1 <= order <= 16.
QuadRule gauss_rule(int order);

} // namespace morley
