// Batch driver for energy-norm convergence studies of the rectangular
// Morley solver on layer-adapted tensor meshes.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "morley/study.hpp"

namespace {

std::vector<double> parse_eps_list(const std::string& arg, bool& coupled) {
  coupled = arg == "coupled";
  std::vector<double> out;
  if (coupled) return out;
  std::stringstream ss(arg);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(std::stod(item));
  if (out.empty()) throw std::invalid_argument("empty eps list");
  return out;
}

void dump_mesh_csv(const morley::TensorMesh& mesh, std::ostream& out) {
  out << "axis,index,coordinate\n";
  for (int k = 0; k <= mesh.nx(); ++k)
    out << "x," << k << ',' << morley::format_sci(mesh.mx.points(k), 15) << '\n';
  for (int k = 0; k <= mesh.ny(); ++k)
    out << "y," << k << ',' << morley::format_sci(mesh.my.points(k), 15) << '\n';
}

std::ofstream open_or_throw(const std::string& path) {
  std::ofstream f(path);
  if (!f) throw std::runtime_error("cannot open output file: " + path);
  return f;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Energy-norm convergence studies for a singularly perturbed "
               "4th-order problem, discretised with rectangular Morley elements "
               "on tensor-product layer-adapted meshes"};
  app.set_config("--config", "", "key=value file with the same keys as the flags");

  std::string preset, problem = "example1", eps_arg = "1e-2", estimator = "exact";
  std::string solver = "direct", format = "csv", out_path, mesh_dump_path, matrix_dump_path;
  std::vector<int> n_list = {16, 32, 64, 128};
  int quad_order = 5;
  double tol = 1e-12;

  app.add_option("--preset", preset, "preset study, one of table1..table4")
      ->check(CLI::IsMember({"table1", "table2", "table3", "table4"}));
  app.add_option("--problem", problem, "example1 | example2 | example3");
  app.add_option("--eps", eps_arg, "comma list of perturbation parameters, or 'coupled' for eps = 1/N");
  app.add_option("--N", n_list, "comma list of mesh intervals per direction (multiples of 4)")
      ->delimiter(',');
  app.add_option("--estimator", estimator, "exact | double-mesh")
      ->check(CLI::IsMember({"exact", "double-mesh"}));
  app.add_option("--quad", quad_order, "tensor Gauss order per element (2..16)")
      ->check(CLI::Range(2, 16));
  app.add_option("--solver", solver, "direct | cg")->check(CLI::IsMember({"direct", "cg"}));
  app.add_option("--tol", tol, "solver relative residual tolerance");
  app.add_option("--format", format, "csv | markdown")
      ->check(CLI::IsMember({"csv", "markdown"}));
  app.add_option("--out", out_path, "output path (default: standard output)");
  app.add_option("--dump-mesh", mesh_dump_path,
                 "write the mesh breakpoints of the first (eps, N) cell as CSV and exit");
  app.add_option("--dump-matrix", matrix_dump_path,
                 "write the assembled matrix of the first cell in coordinate text form and exit");

  CLI11_PARSE(app, argc, argv);

  try {
    morley::StudyConfig cfg;
    if (!preset.empty()) {
      cfg = morley::preset_config(preset);
    } else {
      cfg.problem = problem;
      cfg.eps_list = parse_eps_list(eps_arg, cfg.coupled_eps);
      cfg.n_list = n_list;
      cfg.estimator =
          estimator == "exact" ? morley::Estimator::Exact : morley::Estimator::DoubleMesh;
    }
    cfg.quad_order = quad_order;
    cfg.solver.method = solver == "direct" ? morley::SolveMethod::Direct : morley::SolveMethod::Cg;
    cfg.solver.rel_residual_tol = tol;

    if (!mesh_dump_path.empty() || !matrix_dump_path.empty()) {
      if (cfg.n_list.empty()) throw std::invalid_argument("need at least one N");
      const int n = cfg.n_list.front();
      const double eps = cfg.coupled_eps ? 1.0 / n : cfg.eps_list.front();
      const morley::TensorMesh mesh = morley::shishkin_mesh(eps, n);
      if (!mesh_dump_path.empty()) {
        auto f = open_or_throw(mesh_dump_path);
        dump_mesh_csv(mesh, f);
      }
      if (!matrix_dump_path.empty()) {
        const morley::ProblemSpec p = morley::problem_by_name(cfg.problem, eps);
        const morley::DofMap dm = morley::build_dof_map(mesh);
        const morley::AssembledSystem sys =
            morley::assemble(mesh, dm, eps, p.c, p.f, morley::gauss_rule(cfg.quad_order));
        auto f = open_or_throw(matrix_dump_path);
        morley::write_matrix_coordinate(sys.matrix, f);
      }
      return 0;
    }

    const morley::ConvergenceTable table = morley::run_study(cfg);
    const auto emit = [&](std::ostream& out) {
      if (format == "csv")
        morley::emit_csv(table, out);
      else
        morley::emit_markdown(table, out);
    };
    if (out_path.empty()) {
      emit(std::cout);
    } else {
      auto f = open_or_throw(out_path);
      emit(f);
    }
    std::cerr << "worst solver residual: " << morley::format_sci(table.max_rel_residual, 2)
              << "\n";
    return 0;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
