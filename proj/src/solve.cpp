#include "morley/solve.hpp"

#include <Eigen/IterativeLinearSolvers>
#include <Eigen/SparseCholesky>

#include <chrono>

namespace morley {

namespace {

// b - A x with error-free products (fma) and Neumaier-compensated sums, so
// refinement is driven by the true residual rather than evaluation noise.
Eigen::VectorXd compensated_residual(const SparseMatrix& a, const Eigen::VectorXd& x,
                                     const Eigen::VectorXd& b) {
  Eigen::VectorXd sum = b;
  Eigen::VectorXd comp = Eigen::VectorXd::Zero(b.size());
  for (int k = 0; k < a.outerSize(); ++k) {
    for (SparseMatrix::InnerIterator it(a, k); it; ++it) {
      const int r = static_cast<int>(it.row());
      const double p = it.value() * x(it.col());
      const double p_err = std::fma(it.value(), x(it.col()), -p);
      for (const double term : {-p, -p_err}) {
        const double t = sum(r) + term;
        comp(r) += std::abs(sum(r)) >= std::abs(term) ? (sum(r) - t) + term : (term - t) + sum(r);
        sum(r) = t;
      }
    }
  }
  return sum + comp;
}

double relative_residual(const SparseMatrix& a, const Eigen::VectorXd& x,
                         const Eigen::VectorXd& b) {
  const double b_norm = b.norm();
  if (b_norm == 0.0) return compensated_residual(a, x, b).norm();
  return compensated_residual(a, x, b).norm() / b_norm;
}

// Solve with refinement against the unscaled system. `inner` solves
// A dx = r for the scaled operator; `scale` maps between x and y = D^{-1}x.
template <typename Inner>
Eigen::VectorXd refine(const SparseMatrix& a, const Eigen::VectorXd& b,
                       const Eigen::VectorXd& scale, const Inner& inner, double tol,
                       double& achieved) {
  Eigen::VectorXd x = scale.asDiagonal() * inner(scale.asDiagonal() * b);
  achieved = relative_residual(a, x, b);
  for (int pass = 0; pass < 8 && achieved > tol; ++pass) {
    const Eigen::VectorXd r = compensated_residual(a, x, b);
    const Eigen::VectorXd dx = scale.asDiagonal() * inner(scale.asDiagonal() * r);
    const Eigen::VectorXd x_next = x + dx;
    const double next = relative_residual(a, x_next, b);
    if (next >= achieved) break;
    x = x_next;
    achieved = next;
  }
  return x;
}

} // namespace

SolveResult solve_spd(const SparseMatrix& a, const Eigen::VectorXd& b, const SolveOptions& opts) {
  if (opts.rel_residual_tol <= 0.0) throw std::invalid_argument("solve_spd: tolerance must be positive");
  const auto t0 = std::chrono::steady_clock::now();

  const int n = static_cast<int>(a.rows());
  Eigen::VectorXd scale = Eigen::VectorXd::Ones(n);
  if (opts.prescale) {
    const Eigen::VectorXd d = a.diagonal();
    for (int i = 0; i < n; ++i) scale(i) = d(i) > 0.0 ? 1.0 / std::sqrt(d(i)) : 1.0;
  }
  SparseMatrix as = scale.asDiagonal() * a * scale.asDiagonal();

  SolveResult res;
  if (opts.method == SolveMethod::Direct) {
    Eigen::SimplicialLLT<SparseMatrix> llt(as);
    if (llt.info() != Eigen::Success) {
      SolveReport rep;
      throw SolveError(SolveFailure::NotPositiveDefinite, rep,
                       "solve_spd: Cholesky factorisation failed (matrix not positive definite)");
    }
    res.report.factor_nonzeros = llt.matrixL().nestedExpression().nonZeros();
    res.x = refine(
        a, b, scale, [&](const Eigen::VectorXd& r) { return llt.solve(r).eval(); },
        opts.rel_residual_tol, res.report.rel_residual);
  } else {
    Eigen::ConjugateGradient<SparseMatrix, Eigen::Lower | Eigen::Upper,
                             Eigen::IncompleteCholesky<double, Eigen::Lower, Eigen::AMDOrdering<int>>>
        cg(as);
    cg.setTolerance(std::min(opts.rel_residual_tol, 1e-13));
    cg.setMaxIterations(opts.max_iterations);
    int iterations = 0;
    res.x = refine(
        a, b, scale,
        [&](const Eigen::VectorXd& r) {
          const Eigen::VectorXd y = cg.solve(r).eval();
          iterations += static_cast<int>(cg.iterations());
          return y;
        },
        opts.rel_residual_tol, res.report.rel_residual);
    res.report.iterations = iterations;
    if (res.report.rel_residual > opts.rel_residual_tol) {
      res.report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
      throw SolveError(SolveFailure::NotConverged, res.report,
                       "solve_spd: cg did not reach the requested residual");
    }
  }

  res.report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return res;
}

} // namespace morley
