#pragma once

#include <Eigen/Core>

#include <stdexcept>
#include <string>

#include "morley/assembly.hpp"

namespace morley {

enum class SolveMethod { Direct, Cg };

struct SolveOptions {
  SolveMethod method = SolveMethod::Direct;
  double rel_residual_tol = 1e-12;
  int max_iterations = 20000; ///< cg only
  bool prescale = true;       ///< symmetric Jacobi scaling before factorisation
};

struct SolveReport {
  double rel_residual = 0.0; ///< ||Ax-b|| / ||b|| on the unscaled system
  int iterations = 0;        ///< cg iterations (0 for direct)
  long long factor_nonzeros = 0;
  double seconds = 0.0;
};

enum class SolveFailure { NotPositiveDefinite, NotConverged };

class SolveError : public std::runtime_error {
public:
  SolveError(SolveFailure kind, const SolveReport& report, const std::string& what)
      : std::runtime_error(what), kind(kind), report(report) {}

  SolveFailure kind;
  SolveReport report;
};

struct SolveResult {
  Eigen::VectorXd x;
  SolveReport report;
};

/// Solve the symmetric positive definite system Ax = b to the requested
/// relative residual. Direct = sparse Cholesky with fill-reducing ordering
/// plus iterative refinement; Cg = preconditioned conjugate gradients.
SolveResult solve_spd(const SparseMatrix& a, const Eigen::VectorXd& b, const SolveOptions& opts);

} // namespace morley
