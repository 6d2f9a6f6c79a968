#include "morley/element.hpp"

namespace morley {

LocalBasisEval eval_basis_local(const ElementGeom& geom, double s, double t) {
  const double hx = geom.hx, hy = geom.hy;
  const double s2 = s * s, t2 = t * t;
  const double s3 = s2 * s, t3 = t2 * t;

  LocalBasisEval e;

  // Vertex functions. Local-coordinate derivatives, scaled to physical
  // coordinates at the end.
  const double cs = s3 - s, ct = t3 - t; // cubic-minus-linear parts
  e.value(0) = 0.125 * (2.0 * (1.0 - s) * (1.0 - t) + cs + ct);
  e.value(1) = 0.125 * (2.0 * (1.0 - s) * (1.0 + t) + cs - ct);
  e.value(2) = 0.125 * (2.0 * (1.0 + s) * (1.0 + t) - cs - ct);
  e.value(3) = 0.125 * (2.0 * (1.0 + s) * (1.0 - t) - cs + ct);

  // Grouped so that the edge traces are exactly odd: 3(s^2-1) vanishes
  // identically at s = +-1 in floating point, which keeps the dual edge
  // means of the vertex functions at exact zero on arbitrarily thin cells.
  const double es = 3.0 * (s2 - 1.0), et = 3.0 * (t2 - 1.0);
  e.grad(0, 0) = 0.125 * (2.0 * t + es) / hx;
  e.grad(1, 0) = 0.125 * (-2.0 * t + es) / hx;
  e.grad(2, 0) = 0.125 * (2.0 * t - es) / hx;
  e.grad(3, 0) = 0.125 * (-2.0 * t - es) / hx;

  e.grad(0, 1) = 0.125 * (2.0 * s + et) / hy;
  e.grad(1, 1) = 0.125 * (-2.0 * s - et) / hy;
  e.grad(2, 1) = 0.125 * (2.0 * s - et) / hy;
  e.grad(3, 1) = 0.125 * (-2.0 * s + et) / hy;

  const double sxx = 0.75 * s / (hx * hx), tyy = 0.75 * t / (hy * hy);
  const double sxy = 0.25 / (hx * hy);
  e.second(0, 0) = sxx;  e.second(0, 1) = sxy;  e.second(0, 2) = tyy;
  e.second(1, 0) = sxx;  e.second(1, 1) = -sxy; e.second(1, 2) = -tyy;
  e.second(2, 0) = -sxx; e.second(2, 1) = sxy;  e.second(2, 2) = -tyy;
  e.second(3, 0) = -sxx; e.second(3, 1) = -sxy; e.second(3, 2) = tyy;

  // Edge functions. q1 and q3 vary in y only, q2 and q4 in x only; the
  // element half-width factor makes the dual edge means equal to 1.
  e.value(4) = -0.25 * hy * (t + 1.0) * (t - 1.0) * (t - 1.0);
  e.value(5) = -0.25 * hx * (s + 1.0) * (s - 1.0) * (s - 1.0);
  e.value(6) = 0.25 * hy * (t + 1.0) * (t + 1.0) * (t - 1.0);
  e.value(7) = 0.25 * hx * (s + 1.0) * (s + 1.0) * (s - 1.0);

  e.grad.row(4) << 0.0, -0.25 * (t - 1.0) * (3.0 * t + 1.0);
  e.grad.row(5) << -0.25 * (s - 1.0) * (3.0 * s + 1.0), 0.0;
  e.grad.row(6) << 0.0, 0.25 * (t + 1.0) * (3.0 * t - 1.0);
  e.grad.row(7) << 0.25 * (s + 1.0) * (3.0 * s - 1.0), 0.0;

  e.second.row(4) << 0.0, 0.0, -0.25 * (6.0 * t - 2.0) / hy;
  e.second.row(5) << -0.25 * (6.0 * s - 2.0) / hx, 0.0, 0.0;
  e.second.row(6) << 0.0, 0.0, 0.25 * (6.0 * t + 2.0) / hy;
  e.second.row(7) << 0.25 * (6.0 * s + 2.0) / hx, 0.0, 0.0;

  return e;
}

LocalBasisEval eval_reduced_basis_local(const ElementGeom& geom, double s, double t) {
  const double hx = geom.hx, hy = geom.hy;

  LocalBasisEval e;

  e.value(0) = 0.125 * (2.0 * (1.0 - s) * (1.0 - t) - s - t);
  e.value(1) = 0.125 * (2.0 * (1.0 - s) * (1.0 + t) - s + t);
  e.value(2) = 0.125 * (2.0 * (1.0 + s) * (1.0 + t) + s + t);
  e.value(3) = 0.125 * (2.0 * (1.0 + s) * (1.0 - t) + s - t);

  e.grad(0, 0) = 0.125 * (-2.0 * (1.0 - t) - 1.0) / hx;
  e.grad(1, 0) = 0.125 * (-2.0 * (1.0 + t) - 1.0) / hx;
  e.grad(2, 0) = 0.125 * (2.0 * (1.0 + t) + 1.0) / hx;
  e.grad(3, 0) = 0.125 * (2.0 * (1.0 - t) + 1.0) / hx;

  e.grad(0, 1) = 0.125 * (-2.0 * (1.0 - s) - 1.0) / hy;
  e.grad(1, 1) = 0.125 * (2.0 * (1.0 - s) + 1.0) / hy;
  e.grad(2, 1) = 0.125 * (2.0 * (1.0 + s) + 1.0) / hy;
  e.grad(3, 1) = 0.125 * (-2.0 * (1.0 + s) - 1.0) / hy;

  const double sxy = 0.25 / (hx * hy);
  e.second.row(0) << 0.0, sxy, 0.0;
  e.second.row(1) << 0.0, -sxy, 0.0;
  e.second.row(2) << 0.0, sxy, 0.0;
  e.second.row(3) << 0.0, -sxy, 0.0;

  e.value(4) = -0.25 * hy * (-t * t - t + 1.0);
  e.value(5) = -0.25 * hx * (-s * s - s + 1.0);
  e.value(6) = 0.25 * hy * (t * t - t - 1.0);
  e.value(7) = 0.25 * hx * (s * s - s - 1.0);

  e.grad.row(4) << 0.0, 0.25 * (2.0 * t + 1.0);
  e.grad.row(5) << 0.25 * (2.0 * s + 1.0), 0.0;
  e.grad.row(6) << 0.0, 0.25 * (2.0 * t - 1.0);
  e.grad.row(7) << 0.25 * (2.0 * s - 1.0), 0.0;

  e.second.row(4) << 0.0, 0.0, 0.5 / hy;
  e.second.row(5) << 0.5 / hx, 0.0, 0.0;
  e.second.row(6) << 0.0, 0.0, 0.5 / hy;
  e.second.row(7) << 0.5 / hx, 0.0, 0.0;

  return e;
}

LocalBasisEval eval_basis(const ElementGeom& geom, double x, double y) {
  return eval_basis_local(geom, (x - geom.xc) / geom.hx, (y - geom.yc) / geom.hy);
}

LocalBasisEval eval_reduced_basis(const ElementGeom& geom, double x, double y) {
  return eval_reduced_basis_local(geom, (x - geom.xc) / geom.hx, (y - geom.yc) / geom.hy);
}

Eigen::Matrix<double, 4, 2> element_vertices(const ElementGeom& geom) {
  Eigen::Matrix<double, 4, 2> v;
  v << geom.xc - geom.hx, geom.yc - geom.hy,
       geom.xc - geom.hx, geom.yc + geom.hy,
       geom.xc + geom.hx, geom.yc + geom.hy,
       geom.xc + geom.hx, geom.yc - geom.hy;
  return v;
}

LocalDofs morley_local_dofs(const ElementGeom& geom, const ScalarFn& v, const GradFn& grad_v,
                            const QuadRule& edge_rule) {
  LocalDofs dofs;
  const auto verts = element_vertices(geom);
  for (int k = 0; k < 4; ++k) dofs(k) = v(verts(k, 0), verts(k, 1));

  // Mean of the outward normal derivative over each edge; a factor 1/2
  // converts the [-1,1] integral into a mean.
  double e1 = 0.0, e2 = 0.0, e3 = 0.0, e4 = 0.0;
  for (int q = 0; q < edge_rule.size(); ++q) {
    const double r = edge_rule.nodes(q);
    const double w = 0.5 * edge_rule.weights(q);
    e1 += w * -grad_v(geom.xc + geom.hx * r, geom.yc - geom.hy)(1);
    e2 += w * -grad_v(geom.xc - geom.hx, geom.yc + geom.hy * r)(0);
    e3 += w * grad_v(geom.xc + geom.hx * r, geom.yc + geom.hy)(1);
    e4 += w * grad_v(geom.xc + geom.hx, geom.yc + geom.hy * r)(0);
  }
  dofs(4) = e1;
  dofs(5) = e2;
  dofs(6) = e3;
  dofs(7) = e4;
  return dofs;
}

Matrix8d basis_dof_matrix(const ElementGeom& geom, const QuadRule& edge_rule) {
  Matrix8d m;
  const double corners[4][2] = {{-1, -1}, {-1, 1}, {1, 1}, {1, -1}};
  for (int j = 0; j < 4; ++j)
    m.row(j) = eval_basis_local(geom, corners[j][0], corners[j][1]).value.transpose();
  m.bottomRows<4>().setZero();
  // Symmetric node pairs are summed together so that odd edge traces cancel
  // exactly; otherwise the 1/h scaling of the vertex-function gradients
  // amplifies the summation roundoff on thin cells.
  const int half = edge_rule.size() / 2;
  for (int q = 0; q < half; ++q) {
    const double r = edge_rule.nodes(q);
    const double w = 0.5 * edge_rule.weights(q);
    m.row(4) -= w * (eval_basis_local(geom, r, -1.0).grad.col(1) +
                     eval_basis_local(geom, -r, -1.0).grad.col(1))
                        .transpose();
    m.row(5) -= w * (eval_basis_local(geom, -1.0, r).grad.col(0) +
                     eval_basis_local(geom, -1.0, -r).grad.col(0))
                        .transpose();
    m.row(6) += w * (eval_basis_local(geom, r, 1.0).grad.col(1) +
                     eval_basis_local(geom, -r, 1.0).grad.col(1))
                        .transpose();
    m.row(7) += w * (eval_basis_local(geom, 1.0, r).grad.col(0) +
                     eval_basis_local(geom, 1.0, -r).grad.col(0))
                        .transpose();
  }
  if (edge_rule.size() % 2 == 1) {
    const double w = 0.5 * edge_rule.weights(half);
    m.row(4) -= w * eval_basis_local(geom, 0.0, -1.0).grad.col(1).transpose();
    m.row(5) -= w * eval_basis_local(geom, -1.0, 0.0).grad.col(0).transpose();
    m.row(6) += w * eval_basis_local(geom, 0.0, 1.0).grad.col(1).transpose();
    m.row(7) += w * eval_basis_local(geom, 1.0, 0.0).grad.col(0).transpose();
  }
  return m;
}

Vector8d interpolate_morley(const ElementGeom&, const LocalDofs& dofs) { return dofs; }

Vector8d interpolate_reduced(const ElementGeom&, const LocalDofs& dofs) { return dofs; }

Eigen::Vector4d bilinear_local_coeffs(const Eigen::Vector4d& v) {
  Eigen::Vector4d d;
  d(0) = 0.25 * (v(0) + v(1) + v(2) + v(3));
  d(1) = 0.25 * (-v(0) - v(1) + v(2) + v(3));
  d(2) = 0.25 * (-v(0) + v(1) + v(2) - v(3));
  d(3) = 0.25 * (v(0) - v(1) + v(2) - v(3));
  return d;
}

Eigen::Vector4d interpolate_bilinear(const ElementGeom& geom, const Eigen::Vector4d& vertex_values) {
  const Eigen::Vector4d d = bilinear_local_coeffs(vertex_values);
  const double hx = geom.hx, hy = geom.hy, xc = geom.xc, yc = geom.yc;
  Eigen::Vector4d c;
  c(3) = d(3) / (hx * hy);
  c(1) = d(1) / hx - c(3) * yc;
  c(2) = d(2) / hy - c(3) * xc;
  c(0) = d(0) - d(1) * xc / hx - d(2) * yc / hy + c(3) * xc * yc;
  return c;
}

BilinearEval eval_bilinear_local(const ElementGeom& geom, const Eigen::Vector4d& d, double x,
                                 double y) {
  const double s = (x - geom.xc) / geom.hx;
  const double t = (y - geom.yc) / geom.hy;
  BilinearEval out;
  out.value = d(0) + d(1) * s + d(2) * t + d(3) * s * t;
  out.grad(0) = (d(1) + d(3) * t) / geom.hx;
  out.grad(1) = (d(2) + d(3) * s) / geom.hy;
  return out;
}

} // namespace morley
