#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "morley/problems.hpp"
#include "morley/solution.hpp"
#include "morley/solve.hpp"

namespace morley {

enum class Estimator { Exact, DoubleMesh };

struct StudyConfig {
  std::string problem = "example1";
  std::vector<double> eps_list = {1.0};
  bool coupled_eps = false; ///< eps = 1/N per cell; eps_list ignored
  std::vector<int> n_list = {16, 32};
  Estimator estimator = Estimator::Exact;
  int quad_order = 5;
  SolveOptions solver;
};

struct StudyRow {
  double eps;
  int n;
  double error;
  std::optional<double> rate; ///< attached to the coarser of each (N, 2N) pair
};

struct ConvergenceTable {
  std::string problem;
  std::string estimator;
  std::string norm = "energy";
  std::vector<StudyRow> rows;
  double max_rel_residual = 0.0; ///< worst solver residual over all runs
};

/// Paper table presets: table1 = example1 exact errors over
/// eps in {1,...,1e-8} x N in {16..128}; table2 = example1 with eps = 1/N,
/// N in {16..256}; table3/table4 = examples 2/3 with the double-mesh
/// estimator on the table1 grid.
StudyConfig preset_config(const std::string& name);

/// Run every (eps, N) cell: mesh, dofs, assembly, solve, error; then fill
/// rates along rows.
ConvergenceTable run_study(const StudyConfig& cfg);

/// Solve one cell and return the discrete solution (exposed for tests and
/// for the double-mesh fine runs).
MorleySolution solve_cell(const ProblemSpec& problem, const TensorMesh& mesh, int quad_order,
                          const SolveOptions& solver, SolveReport* report = nullptr);

void emit_csv(const ConvergenceTable& table, std::ostream& out);
void emit_markdown(const ConvergenceTable& table, std::ostream& out);

/// "2.080000e-3": fixed decimal count, exponent without '+' or padding.
std::string format_sci(double x, int decimals);
/// Mantissa with trailing zeros removed: 1.0 -> "1e0", 0.01 -> "1e-2".
std::string format_trimmed(double x);

} // namespace morley
