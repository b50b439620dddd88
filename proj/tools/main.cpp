// Command line front end: certify / fracpow / dtn / study / bessel.
// Exit codes: 0 ok, 2 certification failure, 3 convergence failure, 1 other.

#include <cmath>
#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <fracdtn/bessel.hpp>
#include <fracdtn/dtn.hpp>
#include <fracdtn/errors.hpp>
#include <fracdtn/extension.hpp>
#include <fracdtn/fractional.hpp>
#include <fracdtn/matrix_io.hpp>
#include <fracdtn/mesh.hpp>
#include <fracdtn/operators.hpp>
#include <fracdtn/sectorial_limit.hpp>
#include <fracdtn/study.hpp>

namespace {

using namespace fracdtn;

std::vector<std::string> split_commas(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  std::string cell;
  while (std::getline(in, cell, ',')) out.push_back(cell);
  return out;
}

GradedMesh make_mesh(const std::string& spec, double s, const SectorialOperator& op) {
  const std::vector<std::string> parts = split_commas(spec);
  if (parts.empty() || parts.size() > 3)
    throw std::invalid_argument("--mesh expects N[,T[,gamma]], got '" + spec + "'");
  const int N = std::stoi(parts[0]);
  double T;
  if (parts.size() < 2 || parts[1] == "auto") {
    if (!(op.coercivity > 0.0))
      throw std::invalid_argument("mesh T = auto needs a coercive operator; give T explicitly");
    T = 8.0 / std::sqrt(op.coercivity);
  } else {
    T = std::stod(parts[1]);
  }
  const double gamma = (parts.size() < 3 || parts[2] == "auto")
                           ? std::max(1.0, 1.5 / std::min(s, 1.0 - s))
                           : std::stod(parts[2]);
  return GradedMesh(T, N, gamma);
}

void emit_matrix(const std::string& path, const Matrix& M) {
  if (path.empty()) {
    write_dense_csv(std::cout, M);
    return;
  }
  if (path.size() >= 4 && (path.ends_with(".mtx") || path.ends_with(".mm")))
    save_matrix_market(path, M);
  else
    save_dense_csv(path, M);
}

int run(int argc, char** argv) {
  CLI::App app{"fractional powers of sectorial operators via the extension problem"};
  app.require_subcommand(1);

  std::string source, format = "auto", input_path, output_path, mesh_spec = "256,auto,auto";
  std::string method = "spectral";
  double s = 0.5, lambda = 1.0, t_value = -1.0, residual_at = -1.0, fd_step = 1e-4;
  std::string grid_spec = "auto";
  int exit_code = 0;

  auto* certify = app.add_subcommand("certify", "certify an operator as sectorial");
  certify->add_option("operator", source, "file path or builtin:<name>?k=v&k=v")->required();
  certify->add_option("--format", format, "auto|matrix-market|dense-csv|builtin");
  certify->callback([&] {
    const OperatorBundle b = ingest_operator(source, format);
    std::printf("source: %s\n", source.c_str());
    std::printf("dim: %ld\n", static_cast<long>(b.model.dim()));
    std::printf("continuity: %.17g\n", b.op.continuity);
    std::printf("coercivity: %.17g\n", b.op.coercivity);
    std::printf("sector_angle: %.17g\n", b.op.sector_angle);
    std::printf("hermitian_in_h: %s\n", is_hermitian_in_h(b.op.A, b.model) ? "yes" : "no");
    std::printf("certified: ok\n");
  });

  auto* fracpow = app.add_subcommand("fracpow", "apply A^s to a vector");
  fracpow->add_option("operator", source, "file path or builtin:<name>?k=v&k=v")->required();
  fracpow->add_option("--s", s, "fractional order in (0,1)")->required();
  fracpow->add_option("--method", method, "spectral|balakrishnan|extension|dtn|vertex0")
      ->check(CLI::IsMember({"spectral", "balakrishnan", "extension", "dtn", "vertex0"}));
  fracpow->add_option("--format", format, "auto|matrix-market|dense-csv|builtin");
  fracpow->add_option("--input", input_path, "vector x as one-column CSV (default: all ones)");
  fracpow->add_option("--output", output_path, "result file (default: stdout)");
  fracpow->add_option("--mesh", mesh_spec, "N[,T[,gamma]] for the dtn method");
  fracpow->callback([&] {
    const OperatorBundle b = ingest_operator(source, format);
    Vector x;
    if (input_path.empty()) {
      x = Vector::Ones(b.model.dim());
    } else {
      x = as_vector(load_dense_csv(input_path));
      if (x.size() != b.model.dim())
        throw std::invalid_argument("input vector dimension does not match the operator");
    }
    Vector y;
    if (method == "spectral") {
      y = frac_power_spectral(b.op, b.model, s, x);
    } else if (method == "balakrishnan") {
      y = frac_power_balakrishnan(b.op, b.model, s, x, QuadratureRule::double_exponential());
    } else if (method == "extension") {
      const ExtensionParams p(s);
      y = s_normal_derivative(b.op, b.model, p, x) / p.c_s;
    } else if (method == "dtn") {
      const GradedMesh mesh = make_mesh(mesh_spec, s, b.op);
      DtnOptions opts;
      opts.compute_energy = false;
      y = solve_dirichlet(b.op, b.model, s, x, mesh, opts).s_normal / fractional_constant(s);
    } else {
      y = frac_power_vertex0(b.op, b.model, s, x);
    }
    emit_matrix(output_path, y);
  });

  auto* dtn = app.add_subcommand("dtn", "assemble the discrete Dirichlet-to-Neumann matrix");
  dtn->add_option("operator", source, "file path or builtin:<name>?k=v&k=v")->required();
  dtn->add_option("--s", s, "fractional order in (0,1)")->required();
  dtn->add_option("--mesh", mesh_spec, "N[,T[,gamma]], 'auto' entries allowed");
  dtn->add_option("--format", format, "auto|matrix-market|dense-csv|builtin");
  dtn->add_option("--output", output_path, ".csv or .mtx file (default: stdout CSV)");
  dtn->callback([&] {
    const OperatorBundle b = ingest_operator(source, format);
    const GradedMesh mesh = make_mesh(mesh_spec, s, b.op);
    emit_matrix(output_path, dtn_matrix(b.op, b.model, s, mesh));
  });

  auto* study = app.add_subcommand("study", "run a convergence study from a config file");
  study->add_option("config", input_path, "key = value config file")->required();
  study->callback([&] {
    const Config cfg = Config::load(input_path);
    run_convergence_study(cfg);
    std::printf("study written to %s\n", cfg.get_or("output.path", "study.csv").c_str());
    if (cfg.has("profile.path"))
      std::printf("profile written to %s\n", cfg.get("profile.path").c_str());
  });

  auto* bessel = app.add_subcommand("bessel", "scalar reference solution of the extension ODE");
  bessel->add_option("--lambda", lambda, "spectral parameter, > 0")->required();
  bessel->add_option("--s", s, "fractional order in (0,1)")->required();
  bessel->add_option("--t", t_value, "evaluate u(t) at a single point");
  bessel->add_option("--grid", grid_spec, "T,N table grid (default auto: T = 8/sqrt(lambda), N = 64)");
  bessel->add_option("--residual", residual_at, "print the ODE residual at this t instead");
  bessel->add_option("--fd-step", fd_step, "central difference step for --residual");
  bessel->callback([&] {
    if (!(lambda > 0.0)) throw std::invalid_argument("--lambda must be positive");
    const QuadratureRule rule = QuadratureRule::double_exponential();
    if (residual_at >= 0.0) {
      std::printf("%.17g\n", scalar_bessel_ode_residual(lambda, s, residual_at, fd_step, rule));
      return;
    }
    if (t_value >= 0.0) {
      std::printf("%.17g\n", scalar_bessel_normalized(lambda, s, t_value, rule));
      return;
    }
    double T = 8.0 / std::sqrt(lambda);
    int N = 64;
    if (grid_spec != "auto") {
      const std::vector<std::string> parts = split_commas(grid_spec);
      if (parts.size() != 2) throw std::invalid_argument("--grid expects T,N");
      T = std::stod(parts[0]);
      N = std::stoi(parts[1]);
    }
    std::printf("# lambda = %.17g, s = %.17g\n", lambda, s);
    std::printf("t,u\n");
    for (int j = 0; j <= N; ++j) {
      const double t = T * j / N;
      std::printf("%.17g,%.17g\n", t, scalar_bessel_normalized(lambda, s, t, rule));
    }
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 1;
  }
  return exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const fracdtn::CertificationError& e) {
    std::cerr << "certification failure: " << e.what() << "\n";
    return 2;
  } catch (const fracdtn::ConvergenceError& e) {
    std::cerr << "convergence failure: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
