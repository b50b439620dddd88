#include <benchmark/benchmark.h>

#include <cmath>

#include <fracdtn/dtn.hpp>
#include <fracdtn/extension.hpp>
#include <fracdtn/fractional.hpp>
#include <fracdtn/operators.hpp>
#include <fracdtn/quadrature.hpp>

namespace {

using namespace fracdtn;

OperatorBundle laplacian(int n) {
  char buf[8];
  std::snprintf(buf, sizeof(buf), "%d", n);
  return make_builtin("dirichlet_laplacian_1d", {{"n", buf}});
}

void BM_QuadratureConstruction(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(QuadratureRule::double_exponential());
  }
}
BENCHMARK(BM_QuadratureConstruction);

void BM_Certify(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  OperatorBundle bundle = laplacian(n);
  for (auto _ : state) {
    benchmark::DoNotOptimize(certify_sectorial(bundle.op.A, bundle.model));
  }
  state.SetComplexityN(n);
}
BENCHMARK(BM_Certify)->Arg(16)->Arg(32)->Arg(64)->Complexity();

void BM_SNormalDerivative(benchmark::State& state) {
  OperatorBundle bundle = laplacian(static_cast<int>(state.range(0)));
  const ExtensionParams p(0.5);
  const Vector x = Vector::Ones(bundle.model.dim());
  for (auto _ : state) {
    benchmark::DoNotOptimize(s_normal_derivative(bundle.op, bundle.model, p, x));
  }
}
BENCHMARK(BM_SNormalDerivative)->Arg(16)->Arg(32);

void BM_DtnMatrix(benchmark::State& state) {
  OperatorBundle bundle = laplacian(16);
  const double s = 0.5;
  const GradedMesh mesh =
      GradedMesh::for_problem(s, bundle.op.coercivity, static_cast<int>(state.range(0)));
  DtnOptions opts;
  opts.compute_energy = false;
  for (auto _ : state) {
    benchmark::DoNotOptimize(dtn_matrix(bundle.op, bundle.model, s, mesh, opts));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_DtnMatrix)->Arg(64)->Arg(128)->Arg(256)->Arg(512)->Complexity();

void BM_ScalarDirichletSolve(benchmark::State& state) {
  SectorialOperator op;
  op.A = Matrix::Constant(1, 1, Complex(1.0, 0.0));
  op.continuity = 1.0;
  op.coercivity = 1.0;
  op.sector_angle = 0.0;
  const MeasureSpaceModel unit = MeasureSpaceModel::unit(1);
  const GradedMesh mesh = GradedMesh::for_problem(0.3, 1.0, static_cast<int>(state.range(0)));
  const Vector x = Vector::Ones(1);
  DtnOptions opts;
  opts.compute_energy = false;
  for (auto _ : state) {
    benchmark::DoNotOptimize(solve_dirichlet(op, unit, 0.3, x, mesh, opts));
  }
}
BENCHMARK(BM_ScalarDirichletSolve)->Arg(256)->Arg(1024)->Arg(4096);

}  // namespace

int main(int argc, char** argv) {
  benchmark::Initialize(&argc, argv);
  if (benchmark::ReportUnrecognizedArguments(argc, argv)) return 1;
  benchmark::RunSpecifiedBenchmarks();
  benchmark::Shutdown();
  return 0;
}
