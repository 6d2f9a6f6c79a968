#include "morley/solution.hpp"

#include <cmath>
#include <stdexcept>

namespace morley {

SolutionEval eval_solution(const MorleySolution& sol, int i, int j, double x, double y) {
  const ElementGeom geom = element_geometry(sol.mesh, i, j);
  const double tol = 1e-12;
  if (std::abs(x - geom.xc) > geom.hx * (1.0 + tol) + tol ||
      std::abs(y - geom.yc) > geom.hy * (1.0 + tol) + tol)
    throw std::domain_error("eval_solution: point outside element");

  const Vector8d c = gather_local_coeffs(sol.dm, i, j, sol.coeffs);
  const LocalBasisEval e = eval_basis(geom, x, y);
  SolutionEval out;
  out.value = c.dot(e.value);
  out.grad = e.grad.transpose() * c;
  out.laplacian = c.dot(e.laplacian());
  return out;
}

double energy_error_exact(const MorleySolution& sol, const ExactSolution& exact,
                          const QuadRule& quad) {
  const double eps2 = sol.eps * sol.eps;
  double acc = 0.0;
  for (int j = 0; j < sol.mesh.ny(); ++j) {
    for (int i = 0; i < sol.mesh.nx(); ++i) {
      const ElementGeom geom = element_geometry(sol.mesh, i, j);
      const Vector8d c = gather_local_coeffs(sol.dm, i, j, sol.coeffs);
      for (int qa = 0; qa < quad.size(); ++qa) {
        const double x = geom.xc + geom.hx * quad.nodes(qa);
        for (int qb = 0; qb < quad.size(); ++qb) {
          const double y = geom.yc + geom.hy * quad.nodes(qb);
          const double w = quad.weights(qa) * quad.weights(qb) * geom.hx * geom.hy;
          const LocalBasisEval e = eval_basis_local(geom, quad.nodes(qa), quad.nodes(qb));
          const double dgx = exact.ux(x, y) - e.grad.col(0).dot(c);
          const double dgy = exact.uy(x, y) - e.grad.col(1).dot(c);
          const double dlap = exact.uxx(x, y) + exact.uyy(x, y) - c.dot(e.laplacian());
          acc += w * (eps2 * dlap * dlap + dgx * dgx + dgy * dgy);
        }
      }
    }
  }
  return std::sqrt(acc);
}

double energy_error_double_mesh(const MorleySolution& coarse, const MorleySolution& fine,
                                const QuadRule& quad) {
  const TensorMesh& cm = coarse.mesh;
  const TensorMesh& fm = fine.mesh;
  if (fm.nx() != 2 * cm.nx() || fm.ny() != 2 * cm.ny())
    throw std::invalid_argument("energy_error_double_mesh: fine mesh is not the bisection of the coarse mesh");
  for (int k = 0; k <= cm.nx(); ++k)
    if (fm.mx.points(2 * k) != cm.mx.points(k))
      throw std::invalid_argument("energy_error_double_mesh: meshes not in bisection relation (x)");
  for (int k = 0; k <= cm.ny(); ++k)
    if (fm.my.points(2 * k) != cm.my.points(k))
      throw std::invalid_argument("energy_error_double_mesh: meshes not in bisection relation (y)");

  const double eps2 = coarse.eps * coarse.eps;
  double acc = 0.0;
  for (int fj = 0; fj < fm.ny(); ++fj) {
    for (int fi = 0; fi < fm.nx(); ++fi) {
      const ElementGeom fgeom = element_geometry(fm, fi, fj);
      const int ci = fi / 2, cj = fj / 2;
      const ElementGeom cgeom = element_geometry(cm, ci, cj);
      const Vector8d fc = gather_local_coeffs(fine.dm, fi, fj, fine.coeffs);
      const Vector8d cc = gather_local_coeffs(coarse.dm, ci, cj, coarse.coeffs);
      for (int qa = 0; qa < quad.size(); ++qa) {
        // parent-local coordinate via center offsets; exact for nested cells
        const double sc = ((fgeom.xc - cgeom.xc) + fgeom.hx * quad.nodes(qa)) / cgeom.hx;
        for (int qb = 0; qb < quad.size(); ++qb) {
          const double tc = ((fgeom.yc - cgeom.yc) + fgeom.hy * quad.nodes(qb)) / cgeom.hy;
          const double w = quad.weights(qa) * quad.weights(qb) * fgeom.hx * fgeom.hy;
          const LocalBasisEval fe = eval_basis_local(fgeom, quad.nodes(qa), quad.nodes(qb));
          const LocalBasisEval ce = eval_basis_local(cgeom, sc, tc);
          const double dgx = fe.grad.col(0).dot(fc) - ce.grad.col(0).dot(cc);
          const double dgy = fe.grad.col(1).dot(fc) - ce.grad.col(1).dot(cc);
          const double dlap = fc.dot(fe.laplacian()) - cc.dot(ce.laplacian());
          acc += w * (eps2 * dlap * dlap + dgx * dgx + dgy * dgy);
        }
      }
    }
  }
  return std::sqrt(acc);
}

double convergence_rate(double e_n, double e_2n) {
  if (e_n <= 0.0 || e_2n <= 0.0)
    throw std::invalid_argument("convergence_rate: errors must be positive");
  return (std::log(e_n) - std::log(e_2n)) / std::log(2.0);
}

double energy_norm(const EnergyMatrices& em, double eps, const Eigen::VectorXd& v) {
  const double quad_a = v.dot(em.a * v);
  const double quad_b = v.dot(em.b_unit * v);
  return std::sqrt(eps * eps * quad_a + quad_b);
}

} // namespace morley
