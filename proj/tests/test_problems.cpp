#include "doctest.h"

#include <cmath>
#include <random>

#include "jet.hpp"
#include "morley/assembly.hpp"
#include "morley/problems.hpp"
#include "morley/solution.hpp"
#include "morley/solve.hpp"

using namespace morley;
using testing_jet::Jet;

namespace {

// g and h rebuilt from their closed forms with truncated-Taylor scalars;
// independent of the hand-derived derivative chains in the library.
template <int D>
Jet<D> jet_g(double eps, const Jet<D>& x) {
  const double l = -std::expm1(-1.0 / eps);
  const double amp = M_PI * eps / l;
  const Jet<D> e0 = exp(-1.0 / eps * x);
  const Jet<D> e1 = exp(1.0 / eps * (x - Jet<D>::constant(1.0)));
  return 0.5 * (sin(M_PI * x) + amp * (e0 + e1 - Jet<D>::constant(1.0 + std::exp(-1.0 / eps))));
}

template <int D>
Jet<D> jet_h(double eps, const Jet<D>& y) {
  const LayerConstants lc = layer_constants(eps);
  const Jet<D> one = Jet<D>::constant(1.0);
  const Jet<D> poly = 2.0 * (y * (one - y * y));
  const Jet<D> lin = lc.l * lc.d * (one - 2.0 * y) - Jet<D>::constant(3.0 * lc.q / lc.l);
  const Jet<D> f0 = exp(-1.0 / eps * y);
  const Jet<D> f1 = exp(1.0 / eps * (y - one));
  return poly + eps * (lin + (3.0 / lc.l - lc.d) * f0 + (3.0 / lc.l + lc.d) * f1);
}

} // namespace

TEST_SUITE_BEGIN("problems");

TEST_CASE("layer constants") {
  SUBCASE("eps = 1") {
    const LayerConstants lc = layer_constants(1.0);
    CHECK(lc.l == doctest::Approx(1.0 - std::exp(-1.0)).epsilon(1e-15));
    CHECK(lc.q == doctest::Approx(2.0 - lc.l).epsilon(1e-15));
    CHECK(lc.d == doctest::Approx(9.648930).epsilon(1e-6));
    CHECK(lc.d == doctest::Approx(1.0 / (lc.q - 2.0 * lc.l)).epsilon(1e-14));
  }
  SUBCASE("eps = 1e-8 underflows gracefully") {
    const LayerConstants lc = layer_constants(1e-8);
    CHECK(lc.l == 1.0);
    CHECK(lc.q == 1.0);
    CHECK(lc.d == doctest::Approx(1.00000002).epsilon(1e-9));
  }
  SUBCASE("q equals 1 + exp(-1/eps)") {
    for (double eps : {1.0, 0.5, 1e-1, 1e-2, 1e-4, 1e-8}) {
      const LayerConstants lc = layer_constants(eps);
      CHECK(std::abs(lc.q - (1.0 + std::exp(-1.0 / eps))) <= 1e-15);
    }
  }
  SUBCASE("domain") {
    CHECK_THROWS_AS(layer_constants(0.0), std::invalid_argument);
    CHECK_THROWS_AS(layer_constants(2.0), std::invalid_argument);
  }
}

TEST_CASE("example1 derivative chains match the taylor oracle") {
  std::mt19937 rng(71);
  std::uniform_real_distribution<double> uni(0.0, 1.0);
  for (double eps : {1.0, 1e-2, 1e-8}) {
    const Example1Factors gh(eps);
    for (int s = 0; s < 20; ++s) {
      const double x = uni(rng), y = uni(rng);
      const Jet<4> gj = jet_g(eps, Jet<4>::variable(x));
      const Jet<4> hj = jet_h(eps, Jet<4>::variable(y));
      for (int k = 0; k <= 4; ++k) {
        const double floor = std::pow(M_PI, k);
        const double scale_g = std::max(std::abs(gj.derivative(k)), floor);
        CHECK(std::abs(gh.g(k, x) - gj.derivative(k)) <= 1e-10 * scale_g);
        const double scale_h = std::max(std::abs(hj.derivative(k)), floor);
        CHECK(std::abs(gh.h(k, y) - hj.derivative(k)) <= 1e-10 * scale_h);
      }
    }
  }
}

TEST_CASE("example1 satisfies the differential equation") {
  std::mt19937 rng(73);
  std::uniform_real_distribution<double> uni(0.01, 0.99);
  for (double eps : {1.0, 1e-2, 1e-8}) {
    const ProblemSpec p = example1(eps);
    for (int s = 0; s < 20; ++s) {
      const double x = uni(rng), y = uni(rng);
      const Jet<4> gj = jet_g(eps, Jet<4>::variable(x));
      const Jet<4> hj = jet_h(eps, Jet<4>::variable(y));
      const double bilap = gj.derivative(4) * hj.derivative(0) +
                           2.0 * gj.derivative(2) * hj.derivative(2) +
                           gj.derivative(0) * hj.derivative(4);
      const double lap =
          gj.derivative(2) * hj.derivative(0) + gj.derivative(0) * hj.derivative(2);
      const double resid = eps * eps * bilap - lap - p.f(x, y);
      const double scale = std::abs(eps * eps * bilap) + std::abs(lap) + std::abs(p.f(x, y));
      CHECK(std::abs(resid) <= 1e-8 * std::max(scale, 1.0));
    }
  }
}

TEST_CASE("example1 boundary compatibility") {
  for (double eps : {1.0, 1e-2, 1e-8}) {
    const ProblemSpec p = example1(eps);
    const auto& ex = *p.exact;
    double worst = 0.0;
    for (int k = 0; k <= 250; ++k) {
      const double t = static_cast<double>(k) / 250;
      worst = std::max({worst, std::abs(ex.u(0.0, t)), std::abs(ex.u(1.0, t)),
                        std::abs(ex.u(t, 0.0)), std::abs(ex.u(t, 1.0)),
                        std::abs(ex.ux(0.0, t)), std::abs(ex.ux(1.0, t)),
                        std::abs(ex.uy(t, 0.0)), std::abs(ex.uy(t, 1.0))});
    }
    CHECK(worst <= 1e-10);
  }
}

TEST_CASE("all evaluation paths stay finite at extreme epsilon") {
  const ProblemSpec p = example1(1e-8);
  for (double x : {0.0, 1e-9, 0.5, 1.0 - 1e-9, 1.0}) {
    for (double y : {0.0, 1e-9, 0.5, 1.0 - 1e-9, 1.0}) {
      CHECK(std::isfinite(p.f(x, y)));
      CHECK(std::isfinite(p.exact->u(x, y)));
      CHECK(std::isfinite(p.exact->uxx(x, y)));
      CHECK(std::isfinite(p.exact->uyy(x, y)));
    }
  }
}

TEST_CASE("example2 point data") {
  const ProblemSpec p = example2(1e-2);
  CHECK(p.f(0.0, 0.0) == doctest::Approx(0.0));
  CHECK(p.f(0.5, 0.5) == doctest::Approx(25.0).epsilon(1e-13));
  CHECK(p.c(0.0, 0.0) == doctest::Approx(5.0).epsilon(1e-13));
  CHECK(!p.exact.has_value());
}

TEST_CASE("example3 point data") {
  const ProblemSpec p = example3(1e-2);
  CHECK(std::abs(p.f(0.0, 0.0)) <= 1e-13);
  CHECK(p.f(0.25, 0.25) == doctest::Approx(2.0 * M_PI * M_PI).epsilon(1e-13));
  CHECK(std::abs(p.f(0.5, 0.5)) <= 1e-12);
  CHECK(p.c(0.3, 0.9) == 1.0);
  CHECK(!p.exact.has_value());
}

TEST_CASE("coefficients are uniformly positive") {
  for (const char* name : {"example1", "example2", "example3"}) {
    const ProblemSpec p = problem_by_name(name, 1e-3);
    CHECK(min_coefficient_on_grid(p) >= 1.0);
  }
  CHECK_THROWS_AS(problem_by_name("example9", 1.0), std::invalid_argument);
}

TEST_CASE("plugging interpolated exact dofs into the system is weakly consistent") {
  // The system residual of the exact solution's Morley interpolant, measured
  // in the dual (energy) metric as the distance to the discrete solution,
  // decreases with N but need not vanish.
  const double eps = 1.0;
  const ProblemSpec p = example1(eps);
  const QuadRule er = gauss_rule(5);
  ScalarFn u = p.exact->u;
  GradFn gu = [&](double x, double y) {
    return Eigen::Vector2d(p.exact->ux(x, y), p.exact->uy(x, y));
  };
  std::vector<double> resid;
  for (int n : {8, 16, 32}) {
    const TensorMesh mesh = shishkin_mesh(eps, n);
    const DofMap dm = build_dof_map(mesh);
    const AssembledSystem sys = assemble(mesh, dm, eps, p.c, p.f, gauss_rule(5));
    Eigen::VectorXd ui = Eigen::VectorXd::Zero(dm.n_dofs);
    for (int j = 0; j < mesh.ny(); ++j)
      for (int i = 0; i < mesh.nx(); ++i) {
        const ElementGeom g = element_geometry(mesh, i, j);
        const LocalDofs d = morley_local_dofs(g, u, gu, er);
        const auto& row = local_to_global(dm, i, j);
        for (int k = 0; k < 8; ++k)
          if (row[k].index != kConstrained) ui(row[k].index) = row[k].sign * d(k);
      }
    const Eigen::VectorXd diff = ui - solve_spd(sys.matrix, sys.rhs, SolveOptions{}).x;
    const EnergyMatrices em = energy_matrices(mesh, dm, gauss_rule(5));
    resid.push_back(energy_norm(em, eps, diff));
  }
  CHECK(resid[0] > 1e-12); // nonconforming: consistency error is genuine
  CHECK(resid[1] < resid[0]);
  CHECK(resid[2] < resid[1]);
}

TEST_SUITE_END();
