#include "doctest.h"

#include <sstream>

#include "morley/study.hpp"

using namespace morley;

TEST_SUITE_BEGIN("study");

TEST_CASE("presets match the published table layouts") {
  const StudyConfig t1 = preset_config("table1");
  CHECK(t1.problem == "example1");
  CHECK(t1.estimator == Estimator::Exact);
  REQUIRE(t1.eps_list.size() == 9);
  CHECK(t1.eps_list.front() == 1.0);
  CHECK(t1.eps_list.back() == 1e-8);
  CHECK(t1.n_list == std::vector<int>{16, 32, 64, 128});

  const StudyConfig t2 = preset_config("table2");
  CHECK(t2.coupled_eps);
  CHECK(t2.n_list == std::vector<int>{16, 32, 64, 128, 256});

  const StudyConfig t3 = preset_config("table3");
  CHECK(t3.problem == "example2");
  CHECK(t3.estimator == Estimator::DoubleMesh);
  const StudyConfig t4 = preset_config("table4");
  CHECK(t4.problem == "example3");

  CHECK_THROWS_AS(preset_config("table9"), std::invalid_argument);
}

TEST_CASE("study validation") {
  StudyConfig cfg;
  cfg.n_list = {10};
  CHECK_THROWS_AS(run_study(cfg), std::invalid_argument);
  cfg.n_list = {};
  CHECK_THROWS_AS(run_study(cfg), std::invalid_argument);
  cfg.n_list = {8};
  cfg.problem = "example2";
  cfg.estimator = Estimator::Exact;
  CHECK_THROWS_AS(run_study(cfg), std::invalid_argument);
}

TEST_CASE("small studies fill rows and rates") {
  StudyConfig cfg;
  cfg.problem = "example1";
  cfg.eps_list = {1.0};
  cfg.n_list = {4, 8};
  const ConvergenceTable t = run_study(cfg);
  REQUIRE(t.rows.size() == 2);
  CHECK(t.rows[0].error > t.rows[1].error);
  CHECK(t.rows[0].rate.has_value());
  CHECK(!t.rows[1].rate.has_value());
  CHECK(t.max_rel_residual <= 1e-12);

  SUBCASE("coupled mode uses eps = 1/N per cell") {
    StudyConfig c2;
    c2.problem = "example1";
    c2.coupled_eps = true;
    c2.n_list = {4, 8};
    const ConvergenceTable t2 = run_study(c2);
    CHECK(t2.rows[0].eps == 0.25);
    CHECK(t2.rows[1].eps == 0.125);
    CHECK(t2.rows[0].rate.has_value());
  }

  SUBCASE("double-mesh estimator works without an exact solution") {
    StudyConfig c3;
    c3.problem = "example3";
    c3.eps_list = {1e-2};
    c3.n_list = {4, 8};
    c3.estimator = Estimator::DoubleMesh;
    const ConvergenceTable t3 = run_study(c3);
    CHECK(t3.rows[0].error > 0.0);
    CHECK(t3.estimator == "double-mesh");
  }
}

TEST_CASE("float formatting") {
  CHECK(format_sci(2.08e-3, 6) == "2.080000e-3");
  CHECK(format_sci(4.7e-4, 6) == "4.700000e-4");
  CHECK(format_sci(1.0, 6) == "1.000000e0");
  CHECK(format_trimmed(1.0) == "1e0");
  CHECK(format_trimmed(1e-2) == "1e-2");
  CHECK(format_trimmed(1.0 / 256.0) == "3.90625e-3");
  CHECK(format_trimmed(1e-8) == "1e-8");
}

TEST_CASE("csv emission") {
  ConvergenceTable t;
  t.problem = "example1";
  t.estimator = "exact";
  SUBCASE("empty table is a bare header") {
    std::ostringstream out;
    emit_csv(t, out);
    CHECK(out.str() == "problem,estimator,eps,N,error,rate\n");
  }
  SUBCASE("single row has no rate") {
    t.rows.push_back({1.0, 16, 2.08e-3, std::nullopt});
    std::ostringstream out;
    emit_csv(t, out);
    CHECK(out.str() ==
          "problem,estimator,eps,N,error,rate\n"
          "example1,exact,1e0,16,2.080000e-3,\n");
  }
  SUBCASE("rate attaches to the coarser row") {
    t.rows.push_back({1.0, 16, 4e-2, 2.0});
    t.rows.push_back({1.0, 32, 1e-2, std::nullopt});
    std::ostringstream out;
    emit_csv(t, out);
    CHECK(out.str() ==
          "problem,estimator,eps,N,error,rate\n"
          "example1,exact,1e0,16,4.000000e-2,2.00\n"
          "example1,exact,1e0,32,1.000000e-2,\n");
  }
}

TEST_CASE("markdown emission is aligned") {
  ConvergenceTable t;
  t.problem = "example1";
  t.estimator = "exact";
  t.rows.push_back({1e-2, 16, 2.08e-3, 1.02});
  t.rows.push_back({1e-2, 32, 1.02e-3, std::nullopt});
  std::ostringstream out;
  emit_markdown(t, out);
  const std::string s = out.str();
  CHECK(s.find("## example1 (exact estimator, energy norm)") != std::string::npos);
  CHECK(s.find("| eps") != std::string::npos);
  CHECK(s.find("2.080000e-3") != std::string::npos);
  CHECK(s.find("1.02") != std::string::npos);
}

TEST_CASE("studies and emission are deterministic") {
  StudyConfig cfg;
  cfg.problem = "example1";
  cfg.eps_list = {1e-2};
  cfg.n_list = {4, 8};
  std::ostringstream a, b;
  emit_csv(run_study(cfg), a);
  emit_csv(run_study(cfg), b);
  CHECK(a.str() == b.str());
  CHECK(!a.str().empty());
}

TEST_SUITE_END();
