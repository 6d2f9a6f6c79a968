#include "morley/study.hpp"

#include <algorithm>
#include <array>
#include <cstdio>
#include <ostream>
#include <stdexcept>

namespace morley {

StudyConfig preset_config(const std::string& name) {
  StudyConfig cfg;
  const std::vector<double> table1_eps = {1.0,  1e-1, 1e-2, 1e-3, 1e-4,
                                          1e-5, 1e-6, 1e-7, 1e-8};
  if (name == "table1") {
    cfg.problem = "example1";
    cfg.eps_list = table1_eps;
    cfg.n_list = {16, 32, 64, 128};
    cfg.estimator = Estimator::Exact;
  } else if (name == "table2") {
    cfg.problem = "example1";
    cfg.coupled_eps = true;
    cfg.eps_list.clear();
    cfg.n_list = {16, 32, 64, 128, 256};
    cfg.estimator = Estimator::Exact;
  } else if (name == "table3" || name == "table4") {
    cfg.problem = name == "table3" ? "example2" : "example3";
    cfg.eps_list = table1_eps;
    cfg.n_list = {16, 32, 64, 128};
    cfg.estimator = Estimator::DoubleMesh;
  } else {
    throw std::invalid_argument("unknown preset: " + name);
  }
  return cfg;
}

MorleySolution solve_cell(const ProblemSpec& problem, const TensorMesh& mesh, int quad_order,
                          const SolveOptions& solver, SolveReport* report) {
  const QuadRule quad = gauss_rule(quad_order);
  MorleySolution sol;
  sol.mesh = mesh;
  sol.dm = build_dof_map(mesh);
  sol.eps = problem.eps;
  const AssembledSystem sys = assemble(mesh, sol.dm, problem.eps, problem.c, problem.f, quad);
  SolveResult res = solve_spd(sys.matrix, sys.rhs, solver);
  sol.coeffs = std::move(res.x);
  if (report) *report = res.report;
  return sol;
}

ConvergenceTable run_study(const StudyConfig& cfg) {
  if (cfg.n_list.empty()) throw std::invalid_argument("run_study: N list is empty");
  for (int n : cfg.n_list)
    if (n < 4 || n % 4 != 0)
      throw std::invalid_argument("run_study: every N must be a positive multiple of 4");
  if (!cfg.coupled_eps && cfg.eps_list.empty())
    throw std::invalid_argument("run_study: eps list is empty");

  ConvergenceTable table;
  table.problem = cfg.problem;
  table.estimator = cfg.estimator == Estimator::Exact ? "exact" : "double-mesh";

  const QuadRule quad = gauss_rule(cfg.quad_order);
  const std::vector<double> eps_groups = cfg.coupled_eps ? std::vector<double>{0.0} : cfg.eps_list;

  for (double eps_group : eps_groups) {
    for (int n : cfg.n_list) {
      const double eps = cfg.coupled_eps ? 1.0 / n : eps_group;
      const ProblemSpec problem = problem_by_name(cfg.problem, eps);
      if (cfg.estimator == Estimator::Exact && !problem.exact)
        throw std::invalid_argument("run_study: problem '" + cfg.problem +
                                    "' has no exact solution; use the double-mesh estimator");

      const TensorMesh mesh = shishkin_mesh(eps, n);
      SolveReport report;
      const MorleySolution sol = solve_cell(problem, mesh, cfg.quad_order, cfg.solver, &report);
      table.max_rel_residual = std::max(table.max_rel_residual, report.rel_residual);

      double error;
      if (cfg.estimator == Estimator::Exact) {
        error = energy_error_exact(sol, *problem.exact, quad);
      } else {
        SolveReport fine_report;
        const MorleySolution fine =
            solve_cell(problem, bisect(mesh), cfg.quad_order, cfg.solver, &fine_report);
        table.max_rel_residual = std::max(table.max_rel_residual, fine_report.rel_residual);
        error = energy_error_double_mesh(sol, fine, quad);
      }
      table.rows.push_back({eps, n, error, std::nullopt});
    }
  }

  // Rates along each fixed-eps row of the table (or along the single
  // coupled sequence): attach to the coarser N.
  const std::size_t per_group = cfg.n_list.size();
  for (std::size_t r = 0; r + 1 < table.rows.size(); ++r) {
    if ((r + 1) % per_group == 0) continue; // last N of a group
    if (table.rows[r + 1].n == 2 * table.rows[r].n)
      table.rows[r].rate = convergence_rate(table.rows[r].error, table.rows[r + 1].error);
  }
  return table;
}

std::string format_sci(double x, int decimals) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*e", decimals, x);
  std::string s(buf);
  const std::size_t e = s.find('e');
  std::string mant = s.substr(0, e);
  int expo = std::stoi(s.substr(e + 1));
  return mant + "e" + std::to_string(expo);
}

std::string format_trimmed(double x) {
  std::string s = format_sci(x, 12);
  const std::size_t e = s.find('e');
  std::string mant = s.substr(0, e);
  while (mant.back() == '0') mant.pop_back();
  if (mant.back() == '.') mant.pop_back();
  return mant + s.substr(e);
}

namespace {

std::string rate_string(const std::optional<double>& rate) {
  if (!rate) return "";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", *rate);
  return buf;
}

} // namespace

void emit_csv(const ConvergenceTable& table, std::ostream& out) {
  out << "problem,estimator,eps,N,error,rate\n";
  for (const StudyRow& row : table.rows) {
    out << table.problem << ',' << table.estimator << ',' << format_trimmed(row.eps) << ','
        << row.n << ',' << format_sci(row.error, 6) << ',' << rate_string(row.rate) << '\n';
  }
}

void emit_markdown(const ConvergenceTable& table, std::ostream& out) {
  out << "## " << table.problem << " (" << table.estimator << " estimator, " << table.norm
      << " norm)\n\n";
  std::vector<std::array<std::string, 4>> cells;
  cells.push_back({"eps", "N", "error", "rate"});
  for (const StudyRow& row : table.rows)
    cells.push_back({format_trimmed(row.eps), std::to_string(row.n), format_sci(row.error, 6),
                     rate_string(row.rate)});

  std::array<std::size_t, 4> width = {0, 0, 0, 0};
  for (const auto& row : cells)
    for (int c = 0; c < 4; ++c) width[c] = std::max(width[c], row[c].size());

  for (std::size_t r = 0; r < cells.size(); ++r) {
    out << '|';
    for (int c = 0; c < 4; ++c) {
      std::string cell = cells[r][c];
      cell.resize(width[c], ' ');
      out << ' ' << cell << " |";
    }
    out << '\n';
    if (r == 0) {
      out << '|';
      for (int c = 0; c < 4; ++c) out << ' ' << std::string(width[c], '-') << " |";
      out << '\n';
    }
  }
}

} // namespace morley
