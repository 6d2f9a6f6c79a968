#include "doctest.h"

#include <cmath>

#include "morley/quadrature.hpp"

using namespace morley;

TEST_SUITE_BEGIN("quadrature");

TEST_CASE("low order rules") {
  const QuadRule r1 = gauss_rule(1);
  CHECK(r1.nodes(0) == 0.0);
  CHECK(r1.weights(0) == 2.0);

  const QuadRule r2 = gauss_rule(2);
  CHECK(r2.nodes(0) == doctest::Approx(-0.5773502691896257).epsilon(1e-15));
  CHECK(r2.nodes(1) == doctest::Approx(0.5773502691896257).epsilon(1e-15));
  CHECK(r2.weights(0) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(r2.weights(1) == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("weights sum to 2 and rules are exact to degree 2n-1") {
  for (int order = 1; order <= 16; ++order) {
    const QuadRule r = gauss_rule(order);
    CHECK(r.weights.sum() == doctest::Approx(2.0).epsilon(1e-14));
    // highest even monomial still integrated exactly
    const int p = 2 * order - 2;
    double acc = 0.0;
    for (int q = 0; q < r.size(); ++q) acc += r.weights(q) * std::pow(r.nodes(q), p);
    CHECK(acc == doctest::Approx(2.0 / (p + 1)).epsilon(1e-13));
    // odd monomials vanish by symmetry
    double odd = 0.0;
    for (int q = 0; q < r.size(); ++q) odd += r.weights(q) * std::pow(r.nodes(q), 2 * order - 1);
    CHECK(std::abs(odd) <= 1e-14);
  }
}

TEST_CASE("order five integrates x^8") {
  const QuadRule r = gauss_rule(5);
  double acc = 0.0;
  for (int q = 0; q < r.size(); ++q) acc += r.weights(q) * std::pow(r.nodes(q), 8);
  CHECK(acc == doctest::Approx(2.0 / 9.0).epsilon(1e-14));
}

TEST_CASE("unsupported orders are rejected") {
  CHECK_THROWS_AS(gauss_rule(0), std::invalid_argument);
  CHECK_THROWS_AS(gauss_rule(17), std::invalid_argument);
}

TEST_SUITE_END();
