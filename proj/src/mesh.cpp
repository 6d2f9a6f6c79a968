#include "morley/mesh.hpp"

#include <cmath>
#include <stdexcept>

namespace morley {

double transition_parameter(double eps, int n) {
  if (eps <= 0.0) throw std::invalid_argument("transition_parameter: eps must be positive");
  if (n < 4) throw std::invalid_argument("transition_parameter: n must be at least 4");
  return std::min(eps * std::log(static_cast<double>(n)), 0.25);
}

namespace {

// Mirror the upper half so that points(k) + points(n-k) == 1 holds to one ulp.
void mirror_upper_half(Eigen::VectorXd& points) {
  const int n = static_cast<int>(points.size()) - 1;
  for (int k = 0; k < (n + 1) / 2; ++k) points(n - k) = 1.0 - points(k);
  if (n % 2 == 0) points(n / 2) = 0.5;
}

} // namespace

Mesh1D shishkin_mesh_1d(double eps, int n) {
  if (eps <= 0.0) throw std::invalid_argument("shishkin_mesh_1d: eps must be positive");
  if (n < 4 || n % 4 != 0) throw std::invalid_argument("shishkin_mesh_1d: n must be a positive multiple of 4");

  const double lambda = transition_parameter(eps, n);
  const int fine = n / 4;
  const double w_fine = lambda / fine;
  const double w_coarse = (1.0 - 2.0 * lambda) / (n / 2);

  Mesh1D mesh;
  mesh.eps = eps;
  mesh.lambda = lambda;
  mesh.points.resize(n + 1);
  for (int k = 0; k < fine; ++k) mesh.points(k) = k * w_fine;
  mesh.points(fine) = lambda;
  for (int k = fine + 1; k <= n / 2; ++k) mesh.points(k) = lambda + (k - fine) * w_coarse;
  mirror_upper_half(mesh.points);
  return mesh;
}

Mesh1D uniform_mesh_1d(int n) {
  if (n < 1) throw std::invalid_argument("uniform_mesh_1d: n must be positive");
  Mesh1D mesh;
  mesh.eps = 1.0;
  mesh.lambda = 0.25;
  mesh.points.resize(n + 1);
  for (int k = 0; k <= n; ++k) mesh.points(k) = static_cast<double>(k) / n;
  mirror_upper_half(mesh.points);
  return mesh;
}

Mesh1D bisect(const Mesh1D& mesh) {
  const int n = mesh.intervals();
  Mesh1D out;
  out.eps = mesh.eps;
  out.lambda = mesh.lambda;
  out.points.resize(2 * n + 1);
  for (int k = 0; k < n; ++k) {
    out.points(2 * k) = mesh.points(k);
    out.points(2 * k + 1) = 0.5 * (mesh.points(k) + mesh.points(k + 1));
  }
  out.points(2 * n) = mesh.points(n);
  return out;
}

TensorMesh shishkin_mesh(double eps, int n) {
  Mesh1D m = shishkin_mesh_1d(eps, n);
  return {m, m};
}

TensorMesh uniform_mesh(int n) {
  Mesh1D m = uniform_mesh_1d(n);
  return {m, m};
}

TensorMesh bisect(const TensorMesh& mesh) { return {bisect(mesh.mx), bisect(mesh.my)}; }

ElementGeom element_geometry(const TensorMesh& mesh, int i, int j) {
  if (i < 0 || i >= mesh.nx() || j < 0 || j >= mesh.ny())
    throw std::out_of_range("element_geometry: element index out of range");
  ElementGeom g;
  g.hx = 0.5 * mesh.mx.width(i);
  g.hy = 0.5 * mesh.my.width(j);
  g.xc = mesh.mx.points(i) + g.hx;
  g.yc = mesh.my.points(j) + g.hy;
  return g;
}

EdgeClass classify_edge(const TensorMesh& mesh, const EdgeId& e) {
  const int nx = mesh.nx();
  const int ny = mesh.ny();
  double left_area, right_area;
  if (e.orientation == EdgeOrientation::Vertical) {
    if (e.i < 0 || e.i > nx || e.j < 0 || e.j >= ny)
      throw std::out_of_range("classify_edge: edge index out of range");
    if (e.i == 0 || e.i == nx) return EdgeClass::Boundary;
    const double dy = mesh.my.width(e.j);
    left_area = mesh.mx.width(e.i - 1) * dy;
    right_area = mesh.mx.width(e.i) * dy;
  } else {
    if (e.i < 0 || e.i >= nx || e.j < 0 || e.j > ny)
      throw std::out_of_range("classify_edge: edge index out of range");
    if (e.j == 0 || e.j == ny) return EdgeClass::Boundary;
    const double dx = mesh.mx.width(e.i);
    left_area = dx * mesh.my.width(e.j - 1);
    right_area = dx * mesh.my.width(e.j);
  }
  const double scale = std::max(left_area, right_area);
  return std::abs(left_area - right_area) <= 1e-12 * scale ? EdgeClass::InteriorUniform
                                                           : EdgeClass::InteriorNonuniform;
}

} // namespace morley
