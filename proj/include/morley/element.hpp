#pragma once

#include <Eigen/Core>

#include <functional>

#include "morley/mesh.hpp"
#include "morley/quadrature.hpp"

namespace morley {

using Vector8d = Eigen::Matrix<double, 8, 1>;
using Matrix8d = Eigen::Matrix<double, 8, 8>;

/// Values and derivatives of the 8 local shape functions at one point,
/// in the fixed ordering (p1,p2,p3,p4,q1,q2,q3,q4). Vertex labelling is
/// a1=(-,-), a2=(-,+), a3=(+,+), a4=(+,-); edge labelling e1 bottom,
/// e2 left, e3 top, e4 right, with outward normals.
struct LocalBasisEval {
  Vector8d value;
  Eigen::Matrix<double, 8, 2> grad;   ///< columns: d/dx, d/dy
  Eigen::Matrix<double, 8, 3> second; ///< columns: d2/dxx, d2/dxy, d2/dyy

  Vector8d laplacian() const { return second.col(0) + second.col(2); }
};

/// Shape functions spanning {1,x,y,x^2,xy,y^2,x^3,y^3} on the element,
/// dual to the 8 Morley degrees of freedom. The _local variants take the
/// local coordinates s = (x-xc)/hx, t = (y-yc)/hy in [-1,1] directly;
/// quadrature loops use them so that boundary-layer cells (hx down to
/// ~1e-9) do not lose precision to the global-coordinate round trip.
/// Derivatives are physical in all variants.
LocalBasisEval eval_basis_local(const ElementGeom& geom, double s, double t);
LocalBasisEval eval_basis(const ElementGeom& geom, double x, double y);

/// Quadratic reduced shape functions: the same expressions with all cubic
/// terms removed. They share the Morley degrees of freedom but span only
/// {1,x,y,xy,x^2,y^2}.
LocalBasisEval eval_reduced_basis_local(const ElementGeom& geom, double s, double t);
LocalBasisEval eval_reduced_basis(const ElementGeom& geom, double x, double y);

/// Morley degrees of freedom of a function on one element: the 4 vertex
/// values (a1..a4) followed by the 4 mean outward normal derivatives over
/// the edges (e1..e4).
using LocalDofs = Vector8d;

using ScalarFn = std::function<double(double, double)>;
using GradFn = std::function<Eigen::Vector2d(double, double)>;

/// Edge means are computed with the given 1D Gauss rule.
LocalDofs morley_local_dofs(const ElementGeom& geom, const ScalarFn& v, const GradFn& grad_v,
                            const QuadRule& edge_rule);

/// The matrix M(j,i) = DOF_j(phi_i) of the shape functions, evaluated in
/// local coordinates; the identity up to quadrature roundoff for any
/// geometry, however anisotropic.
Matrix8d basis_dof_matrix(const ElementGeom& geom, const QuadRule& edge_rule);

/// Coefficients of the Morley interpolant in the (p,q) basis. By duality
/// these are the degrees of freedom themselves.
Vector8d interpolate_morley(const ElementGeom& geom, const LocalDofs& dofs);

/// Coefficients of the reduced interpolant in the (p-,q-) functions.
Vector8d interpolate_reduced(const ElementGeom& geom, const LocalDofs& dofs);

/// The unique c0 + c1*x + c2*y + c3*x*y matching the four vertex values
/// (ordered a1..a4).
Eigen::Vector4d interpolate_bilinear(const ElementGeom& geom, const Eigen::Vector4d& vertex_values);

/// Same interpolant in local coordinates: d0 + d1*s + d2*t + d3*s*t with
/// s = (x-xc)/hx, t = (y-yc)/hy. Preferred on tiny layer cells.
Eigen::Vector4d bilinear_local_coeffs(const Eigen::Vector4d& vertex_values);

/// Value and physical gradient of the local-coordinate bilinear form above.
struct BilinearEval {
  double value;
  Eigen::Vector2d grad;
};
BilinearEval eval_bilinear_local(const ElementGeom& geom, const Eigen::Vector4d& local_coeffs,
                                 double x, double y);

/// Positions of the four vertices a1..a4.
Eigen::Matrix<double, 4, 2> element_vertices(const ElementGeom& geom);

} // namespace morley
