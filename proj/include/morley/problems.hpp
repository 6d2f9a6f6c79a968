#pragma once

#include <optional>
#include <string>

#include "morley/element.hpp"

namespace morley {

/// Exact solution data: value and the derivatives needed for energy-norm
/// errors. The Laplacian is uxx + uyy.
struct ExactSolution {
  ScalarFn u, ux, uy, uxx, uyy;
};

/// Data of the boundary value problem
///   eps^2 lap(lap u) - div(c grad u) = f on (0,1)^2,
///   u = du/dn = 0 on the boundary,
/// with c >= c0 > 0.
struct ProblemSpec {
  std::string name;
  double eps = 1.0;
  ScalarFn c;
  ScalarFn f;
  std::optional<ExactSolution> exact;
};

/// Constants of the example-1 layer profile: l = 1 - exp(-1/eps),
/// q = 2 - l, d = 1/(q - 2*eps*l).
struct LayerConstants {
  double l, q, d;
};

LayerConstants layer_constants(double eps);

/// Separable factors of the example-1 solution u = g(x) h(y) and their
/// derivatives g^(k), h^(k) for k = 0..4. All exponentials are evaluated
/// with nonpositive arguments.
class Example1Factors {
public:
  explicit Example1Factors(double eps);

  double g(int order, double x) const;
  double h(int order, double y) const;

private:
  double eps_;
  double amp_;      ///< pi*eps/l
  double g_const_;  ///< a*(1 + exp(-1/eps))
  double b0_, b1_;  ///< 3/l -+ d
  double ld_, q_over_l_;
};

/// c = 1 and f manufactured so that u = g(x) h(y) with boundary layers on
/// all four sides; carries the exact solution.
ProblemSpec example1(double eps);

/// Polynomial load, variable coefficient c = 3 + (1+x)y^2 + (2-y)e^x.
ProblemSpec example2(double eps);

/// c = 1, f = 2 pi^2 (1 - cos(2 pi x) cos(2 pi y)).
ProblemSpec example3(double eps);

/// Lookup by name "example1" | "example2" | "example3".
ProblemSpec problem_by_name(const std::string& name, double eps);

/// Minimum of c over an equispaced (samples x samples) grid on the closed
/// square; positivity check for user-supplied coefficients.
double min_coefficient_on_grid(const ProblemSpec& p, int samples = 101);

} // namespace morley
