#pragma once

#include <Eigen/Core>

#include "morley/assembly.hpp"
#include "morley/dof_map.hpp"
#include "morley/mesh.hpp"
#include "morley/problems.hpp"
#include "morley/quadrature.hpp"

namespace morley {

/// A discrete function: global dof coefficients bound to a mesh.
struct MorleySolution {
  TensorMesh mesh;
  DofMap dm;
  Eigen::VectorXd coeffs;
  double eps = 1.0;
};

struct SolutionEval {
  double value;
  Eigen::Vector2d grad;
  double laplacian;
};

/// Evaluate the piecewise polynomial on element (i,j); (x,y) must lie in
/// the closed element.
SolutionEval eval_solution(const MorleySolution& sol, int i, int j, double x, double y);

/// Broken energy-norm error against an exact solution:
///   sqrt( sum_K int_K eps^2 (lap u - lap u_N)^2 + |grad u - grad u_N|^2 ),
/// integrated with the given 1D rule per direction on each element.
double energy_error_exact(const MorleySolution& sol, const ExactSolution& exact,
                          const QuadRule& quad);

/// Double-mesh estimate: broken energy norm of (fine - coarse), where
/// fine.mesh must be bisect(coarse.mesh). Both functions are polynomial on
/// each fine element, so integration runs over the fine elements; eps is
/// taken from the coarse solution.
double energy_error_double_mesh(const MorleySolution& coarse, const MorleySolution& fine,
                                const QuadRule& quad);

/// (ln e_N - ln e_2N) / ln 2; both errors must be positive.
double convergence_rate(double e_n, double e_2n);

/// Energy norm of a discrete coefficient vector through the assembled
/// matrices: sqrt(eps^2 v'Av + v'Bv).
double energy_norm(const EnergyMatrices& em, double eps, const Eigen::VectorXd& v);

} // namespace morley
