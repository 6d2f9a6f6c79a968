#pragma once

#include <Eigen/Core>

#include <array>
#include <vector>

#include "morley/element.hpp"
#include "morley/mesh.hpp"

namespace morley {

/// One slot of an element's local-to-global table. Constrained slots
/// (boundary nodes/edges, fixed to zero) carry index kConstrained.
struct DofEntry {
  int index;
  double sign;
};

inline constexpr int kConstrained = -1;

/// Global numbering of the unconstrained Morley degrees of freedom:
/// interior node values first (lexicographic in (i,j)), then interior
/// vertical-edge means of d/dx (global normal +x), then interior
/// horizontal-edge means of d/dy (global normal +y).
///
/// Element-local edge dofs use outward normals, so the slots for the left
/// and bottom edges carry sign -1 relative to the global convention.
struct DofMap {
  int nx = 0, ny = 0;
  int n_dofs = 0;
  Eigen::ArrayXXi node_index;  ///< (nx+1) x (ny+1)
  Eigen::ArrayXXi vedge_index; ///< (nx+1) x ny
  Eigen::ArrayXXi hedge_index; ///< nx x (ny+1)
  std::vector<std::array<DofEntry, 8>> scatter; ///< element (i,j) at j*nx+i
};

DofMap build_dof_map(const TensorMesh& mesh);

const std::array<DofEntry, 8>& local_to_global(const DofMap& dm, int i, int j);

/// Signed local coefficients of element (i,j) for a global coefficient
/// vector; constrained slots contribute zero.
Vector8d gather_local_coeffs(const DofMap& dm, int i, int j, const Eigen::VectorXd& u);

} // namespace morley
