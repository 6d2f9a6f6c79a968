#include "morley/assembly.hpp"

#include <ostream>
#include <vector>

namespace morley {

void local_matrices(const ElementGeom& geom, const ScalarFn& c, const QuadRule& quad,
                    Matrix8d& a_loc, Matrix8d& b_loc) {
  a_loc.setZero();
  b_loc.setZero();
  for (int qa = 0; qa < quad.size(); ++qa) {
    const double x = geom.xc + geom.hx * quad.nodes(qa);
    for (int qb = 0; qb < quad.size(); ++qb) {
      const double y = geom.yc + geom.hy * quad.nodes(qb);
      const double w = quad.weights(qa) * quad.weights(qb) * geom.hx * geom.hy;
      const LocalBasisEval e = eval_basis_local(geom, quad.nodes(qa), quad.nodes(qb));
      const Vector8d lap = e.laplacian();
      // form the outer products first; scaling the formed matrix keeps the
      // accumulation exactly symmetric
      const Matrix8d ll = lap * lap.transpose();
      const Matrix8d gg = e.grad * e.grad.transpose();
      a_loc.noalias() += w * ll;
      b_loc.noalias() += (w * c(x, y)) * gg;
    }
  }
}

namespace {

// Accumulates eps^2*A + B for every element into one triplet list, plus the
// load vector. Passing eps = 1, c = 1 and splitting gives the norm matrices.
void assemble_pieces(const TensorMesh& mesh, const DofMap& dm, const ScalarFn& c,
                     const QuadRule& quad, double a_weight, const ScalarFn* f,
                     SparseMatrix* out_matrix, SparseMatrix* out_a, SparseMatrix* out_b,
                     Eigen::VectorXd* out_rhs) {
  const int n = dm.n_dofs;
  std::vector<Eigen::Triplet<double>> trip, trip_a, trip_b;
  const std::size_t guess = static_cast<std::size_t>(mesh.num_elements()) * 64;
  if (out_matrix) trip.reserve(guess);
  if (out_a) trip_a.reserve(guess);
  if (out_b) trip_b.reserve(guess);
  if (out_rhs) out_rhs->setZero(n);

  Matrix8d a_loc, b_loc;
  for (int j = 0; j < mesh.ny(); ++j) {
    for (int i = 0; i < mesh.nx(); ++i) {
      const ElementGeom geom = element_geometry(mesh, i, j);
      local_matrices(geom, c, quad, a_loc, b_loc);

      Vector8d f_loc = Vector8d::Zero();
      if (f) {
        for (int qa = 0; qa < quad.size(); ++qa) {
          const double x = geom.xc + geom.hx * quad.nodes(qa);
          for (int qb = 0; qb < quad.size(); ++qb) {
            const double y = geom.yc + geom.hy * quad.nodes(qb);
            const double w = quad.weights(qa) * quad.weights(qb) * geom.hx * geom.hy;
            f_loc += (w * (*f)(x, y)) * eval_basis_local(geom, quad.nodes(qa), quad.nodes(qb)).value;
          }
        }
      }

      const auto& rows = local_to_global(dm, i, j);
      for (int r = 0; r < 8; ++r) {
        if (rows[r].index == kConstrained) continue;
        const int gr = rows[r].index;
        const double sr = rows[r].sign;
        if (out_rhs) (*out_rhs)(gr) += sr * f_loc(r);
        for (int s = 0; s < 8; ++s) {
          if (rows[s].index == kConstrained) continue;
          const int gs = rows[s].index;
          const double w = sr * rows[s].sign;
          if (out_matrix)
            trip.emplace_back(gr, gs, w * (a_weight * a_loc(r, s) + b_loc(r, s)));
          if (out_a) trip_a.emplace_back(gr, gs, w * a_loc(r, s));
          if (out_b) trip_b.emplace_back(gr, gs, w * b_loc(r, s));
        }
      }
    }
  }

  if (out_matrix) {
    out_matrix->resize(n, n);
    out_matrix->setFromTriplets(trip.begin(), trip.end());
    out_matrix->makeCompressed();
  }
  if (out_a) {
    out_a->resize(n, n);
    out_a->setFromTriplets(trip_a.begin(), trip_a.end());
    out_a->makeCompressed();
  }
  if (out_b) {
    out_b->resize(n, n);
    out_b->setFromTriplets(trip_b.begin(), trip_b.end());
    out_b->makeCompressed();
  }
}

} // namespace

AssembledSystem assemble(const TensorMesh& mesh, const DofMap& dm, double eps, const ScalarFn& c,
                         const ScalarFn& f, const QuadRule& quad) {
  AssembledSystem sys;
  assemble_pieces(mesh, dm, c, quad, eps * eps, &f, &sys.matrix, nullptr, nullptr, &sys.rhs);
  return sys;
}

EnergyMatrices energy_matrices(const TensorMesh& mesh, const DofMap& dm, const QuadRule& quad) {
  EnergyMatrices em;
  const ScalarFn one = [](double, double) { return 1.0; };
  assemble_pieces(mesh, dm, one, quad, 1.0, nullptr, nullptr, &em.a, &em.b_unit, nullptr);
  return em;
}

void write_matrix_coordinate(const SparseMatrix& m, std::ostream& out) {
  out.precision(17);
  for (int k = 0; k < m.outerSize(); ++k)
    for (SparseMatrix::InnerIterator it(m, k); it; ++it)
      out << it.row() << ' ' << it.col() << ' ' << it.value() << '\n';
}

} // namespace morley
