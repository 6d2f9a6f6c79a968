#include "morley/dof_map.hpp"

#include <stdexcept>

namespace morley {

DofMap build_dof_map(const TensorMesh& mesh) {
  DofMap dm;
  dm.nx = mesh.nx();
  dm.ny = mesh.ny();

  dm.node_index.setConstant(dm.nx + 1, dm.ny + 1, kConstrained);
  dm.vedge_index.setConstant(dm.nx + 1, dm.ny, kConstrained);
  dm.hedge_index.setConstant(dm.nx, dm.ny + 1, kConstrained);

  int next = 0;
  for (int i = 1; i < dm.nx; ++i)
    for (int j = 1; j < dm.ny; ++j) dm.node_index(i, j) = next++;
  for (int i = 1; i < dm.nx; ++i)
    for (int j = 0; j < dm.ny; ++j) dm.vedge_index(i, j) = next++;
  for (int i = 0; i < dm.nx; ++i)
    for (int j = 1; j < dm.ny; ++j) dm.hedge_index(i, j) = next++;
  dm.n_dofs = next;

  dm.scatter.resize(static_cast<std::size_t>(dm.nx) * dm.ny);
  for (int j = 0; j < dm.ny; ++j) {
    for (int i = 0; i < dm.nx; ++i) {
      std::array<DofEntry, 8>& row = dm.scatter[static_cast<std::size_t>(j) * dm.nx + i];
      row[0] = {dm.node_index(i, j), 1.0};
      row[1] = {dm.node_index(i, j + 1), 1.0};
      row[2] = {dm.node_index(i + 1, j + 1), 1.0};
      row[3] = {dm.node_index(i + 1, j), 1.0};
      row[4] = {dm.hedge_index(i, j), -1.0};      // bottom: outward normal -y
      row[5] = {dm.vedge_index(i, j), -1.0};      // left: outward normal -x
      row[6] = {dm.hedge_index(i, j + 1), 1.0};   // top
      row[7] = {dm.vedge_index(i + 1, j), 1.0};   // right
    }
  }
  return dm;
}

const std::array<DofEntry, 8>& local_to_global(const DofMap& dm, int i, int j) {
  if (i < 0 || i >= dm.nx || j < 0 || j >= dm.ny)
    throw std::out_of_range("local_to_global: element index out of range");
  return dm.scatter[static_cast<std::size_t>(j) * dm.nx + i];
}

Vector8d gather_local_coeffs(const DofMap& dm, int i, int j, const Eigen::VectorXd& u) {
  const auto& row = local_to_global(dm, i, j);
  Vector8d c;
  for (int k = 0; k < 8; ++k)
    c(k) = row[k].index == kConstrained ? 0.0 : row[k].sign * u(row[k].index);
  return c;
}

} // namespace morley
