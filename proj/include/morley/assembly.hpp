#pragma once

#include <Eigen/Core>
#include <Eigen/SparseCore>

#include <iosfwd>

#include "morley/dof_map.hpp"
#include "morley/element.hpp"
#include "morley/mesh.hpp"
#include "morley/quadrature.hpp"

namespace morley {

using SparseMatrix = Eigen::SparseMatrix<double>;

/// Element matrices by tensor Gauss quadrature:
///   a_loc(i,j) = int_K lap(phi_i) lap(phi_j),
///   b_loc(i,j) = int_K c grad(phi_i) . grad(phi_j).
void local_matrices(const ElementGeom& geom, const ScalarFn& c, const QuadRule& quad,
                    Matrix8d& a_loc, Matrix8d& b_loc);

struct AssembledSystem {
  SparseMatrix matrix; ///< eps^2 * a_N + b_N on the unconstrained dofs
  Eigen::VectorXd rhs; ///< (f, phi_k)
};

AssembledSystem assemble(const TensorMesh& mesh, const DofMap& dm, double eps, const ScalarFn& c,
                         const ScalarFn& f, const QuadRule& quad);

/// The two bilinear-form matrices separately, with unit diffusion
/// coefficient; used to evaluate the mesh-dependent energy norm
///   |v|^2 = eps^2 v'Av + v'Bv.
struct EnergyMatrices {
  SparseMatrix a;
  SparseMatrix b_unit;
};

EnergyMatrices energy_matrices(const TensorMesh& mesh, const DofMap& dm, const QuadRule& quad);

/// Coordinate text format: "row col value" per line, 17 significant digits.
void write_matrix_coordinate(const SparseMatrix& m, std::ostream& out);

} // namespace morley
