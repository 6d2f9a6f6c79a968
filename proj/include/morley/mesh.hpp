#pragma once

#include <Eigen/Core>

namespace morley {

/// One-dimensional mesh of [0,1]: strictly increasing breakpoints with
/// points(0) = 0 and points(n) = 1.
struct Mesh1D {
  double eps = 1.0;     ///< perturbation parameter the mesh was built for
  double lambda = 0.25; ///< transition parameter (0.25 for uniform meshes)
  Eigen::VectorXd points;

  int intervals() const { return static_cast<int>(points.size()) - 1; }
  double width(int k) const { return points(k + 1) - points(k); }
};

/// lambda = min(eps * ln(n), 1/4).
double transition_parameter(double eps, int n);

/// Piecewise-uniform layer-adapted mesh: n/4 intervals on [0,lambda],
/// n/2 on [lambda, 1-lambda], n/4 on [1-lambda, 1]. Requires n >= 4 and
/// n divisible by 4. The breakpoint list is exactly symmetric under
/// x -> 1-x.
Mesh1D shishkin_mesh_1d(double eps, int n);

/// Equidistant mesh with n intervals.
Mesh1D uniform_mesh_1d(int n);

/// Split every interval at its midpoint.
Mesh1D bisect(const Mesh1D& mesh);

/// Tensor product of two 1D meshes. Element (i,j) is
/// [mx.points(i), mx.points(i+1)] x [my.points(j), my.points(j+1)].
struct TensorMesh {
  Mesh1D mx;
  Mesh1D my;

  int nx() const { return mx.intervals(); }
  int ny() const { return my.intervals(); }
  int num_elements() const { return nx() * ny(); }
};

TensorMesh shishkin_mesh(double eps, int n);
TensorMesh uniform_mesh(int n);
TensorMesh bisect(const TensorMesh& mesh);

/// Axis-aligned rectangle of dimensions 2hx x 2hy centred at (xc, yc).
struct ElementGeom {
  double xc, yc;
  double hx, hy;

  double area() const { return 4.0 * hx * hy; }
};

ElementGeom element_geometry(const TensorMesh& mesh, int i, int j);

enum class EdgeOrientation { Vertical, Horizontal };

/// Vertical edge (i,j):   {x = mx.points(i)} x [my.points(j), my.points(j+1)],
///   0 <= i <= nx, 0 <= j < ny.
/// Horizontal edge (i,j): [mx.points(i), mx.points(i+1)] x {y = my.points(j)},
///   0 <= i < nx, 0 <= j <= ny.
struct EdgeId {
  EdgeOrientation orientation;
  int i, j;
};

enum class EdgeClass { InteriorUniform, InteriorNonuniform, Boundary };

/// Boundary iff the edge lies on the domain boundary; otherwise the patch of
/// the two adjacent elements decides: equal areas -> InteriorUniform.
EdgeClass classify_edge(const TensorMesh& mesh, const EdgeId& e);

} // namespace morley
