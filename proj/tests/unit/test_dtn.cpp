#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include <fracdtn/dtn.hpp>
#include <fracdtn/extension.hpp>
#include <fracdtn/fractional.hpp>
#include <fracdtn/mesh.hpp>
#include <fracdtn/sectorial.hpp>

using namespace fracdtn;

namespace {

SectorialOperator diag_op(std::initializer_list<double> lams) {
  const Index n = static_cast<Index>(lams.size());
  Matrix A = Matrix::Zero(n, n);
  double lo = 0.0, hi = 0.0;
  Index i = 0;
  for (double lam : lams) {
    A(i, i) = lam;
    lo = i == 0 ? lam : std::min(lo, lam);
    hi = i == 0 ? lam : std::max(hi, lam);
    ++i;
  }
  return SectorialOperator{A, hi, lo, 0.0};
}

}  // namespace

TEST_CASE("scalar extension reproduces exp(-t) for lambda = 1, s = 1/2") {
  auto op = diag_op({1.0});
  auto model = MeasureSpaceModel::unit(1);
  Vector x(1);
  x << 1.0;
  GradedMesh mesh = GradedMesh::for_problem(0.5, 1.0, 512);
  auto sol = solve_dirichlet(op, model, 0.5, x, mesh);

  double sup = 0.0;
  for (int j = 0; j <= mesh.intervals(); ++j)
    sup = std::max(sup, std::abs(sol.u.values()(j, 0) - Complex(std::exp(-mesh.node(j)))));
  CHECK(sup <= 5e-4);

  // the boundary rows are essential, not approximated
  CHECK((sol.trace - x).norm() == 0.0);
  CHECK(std::abs(sol.u.values()(mesh.intervals(), 0)) == 0.0);
}

TEST_CASE("dtn matrix of the identity is c_s times the identity") {
  auto op = diag_op({1.0, 1.0});
  auto model = MeasureSpaceModel::unit(2);
  for (double s : {0.25, 0.5, 0.75}) {
    CAPTURE(s);
    GradedMesh mesh = GradedMesh::for_problem(s, 1.0, 256);
    Matrix D = dtn_matrix(op, model, s, mesh);
    Matrix ref = fractional_constant(s) * Matrix::Identity(2, 2);
    CHECK((D - ref).norm() / ref.norm() <= 2e-4);
  }
}

TEST_CASE("dtn matrix converges to c_s A^s at second order in the mesh") {
  auto op = diag_op({1.0, 4.0, 25.0});
  auto model = MeasureSpaceModel::unit(3);
  const double s = 0.6;
  Matrix ref = fractional_constant(s) * frac_power_spectral_matrix(op, model, s);

  std::vector<double> errs;
  for (int N : {64, 128, 256}) {
    GradedMesh mesh = GradedMesh::for_problem(s, op.coercivity, N);
    errs.push_back((dtn_matrix(op, model, s, mesh) - ref).norm() / ref.norm());
  }
  CHECK(errs[0] <= 5e-4);
  CHECK(errs[2] <= 3e-5);
  for (std::size_t k = 0; k + 1 < errs.size(); ++k) {
    CHECK(errs[k + 1] < errs[k]);
    CHECK(std::log2(errs[k] / errs[k + 1]) >= 1.8);
  }
}

TEST_CASE("flux extraction: variational flux converges fast, first-cell model stays consistent") {
  auto op = diag_op({1.0, 4.0, 25.0});
  auto model = MeasureSpaceModel::unit(3);
  const double s = 0.4;
  Vector x(3);
  x << 1.0, -0.5, 2.0;
  Vector ref = fractional_constant(s) * frac_power_spectral(op, model, s, x);
  GradedMesh mesh = GradedMesh::for_problem(s, op.coercivity, 256);

  DtnOptions var, cell;
  var.extraction = FluxExtraction::VariationalFlux;
  cell.extraction = FluxExtraction::FirstCellModel;
  const double err_var =
      (solve_dirichlet(op, model, s, x, mesh, var).s_normal - ref).norm() / ref.norm();
  const double err_cell =
      (solve_dirichlet(op, model, s, x, mesh, cell).s_normal - ref).norm() / ref.norm();

  CHECK(err_var <= 1e-4);
  // differencing across the microscopic first cell is only consistent at the
  // percent level on the strongly graded default mesh
  CHECK(err_cell <= 0.05);
  CHECK(err_var * 100.0 < err_cell);
}

TEST_CASE("dirichlet-to-neumann-to-dirichlet roundtrip recovers the trace") {
  auto op = diag_op({1.0, 4.0, 25.0});
  auto model = MeasureSpaceModel::unit(3);
  const double s = 0.35;
  Vector x(3);
  x << 0.3, 1.0, -0.7;
  GradedMesh mesh = GradedMesh::for_problem(s, op.coercivity, 192);

  auto dsol = solve_dirichlet(op, model, s, x, mesh);
  auto nsol = solve_neumann(op, model, s, dsol.s_normal, mesh);
  CHECK((nsol.trace - x).norm() / x.norm() <= 1e-8);
  CHECK(dirichlet_energy_identity(dsol, model) <= 1e-12);
}

TEST_CASE("isomorphism report on the unit model") {
  auto op = diag_op({1.0, 9.0, 36.0, 100.0});
  auto model = MeasureSpaceModel::unit(4);
  GradedMesh mesh = GradedMesh::for_problem(0.5, op.coercivity, 256);
  auto rep = verify_dtn_isomorphism(op, model, 0.5, mesh);

  // m = 1, so the map norm is c_s max(lambda)^s = 10 and the inverse norm
  // c_s^{-1} min(lambda)^{-s} = 1, up to discretization
  CHECK(rep.dtn_norm == doctest::Approx(10.0).epsilon(1e-3));
  CHECK(rep.inverse_norm == doctest::Approx(1.0).epsilon(1e-3));
  CHECK(rep.trace_constant == doctest::Approx(1.0).epsilon(1e-3));
  CHECK(rep.bound_satisfied);
  CHECK(rep.inverse_norm <= rep.stability_bound * (1.0 + 1e-12));
}

TEST_CASE("isomorphism report with m matched to the spectrum") {
  RealVector sigma(3), m(3);
  sigma << 1.0, 2.0, 0.5;
  m << 1.0, 4.0, 25.0;
  MeasureSpaceModel model(sigma, m);
  Matrix A = Matrix::Zero(3, 3);
  A(0, 0) = 1.0;
  A(1, 1) = 4.0;
  A(2, 2) = 25.0;
  auto op = certify_sectorial(A, model);
  CHECK(op.coercivity == doctest::Approx(1.0));
  CHECK(op.continuity == doctest::Approx(1.0));

  const double s = 0.3;
  GradedMesh mesh = GradedMesh::for_problem(s, 1.0, 256);
  auto rep = verify_dtn_isomorphism(op, model, s, mesh);
  // every mode is scaled identically, so both norms collapse to c_s and 1/c_s
  CHECK(rep.dtn_norm == doctest::Approx(fractional_constant(s)).epsilon(1e-3));
  CHECK(rep.dtn_norm * rep.inverse_norm == doctest::Approx(1.0).epsilon(2e-3));
  CHECK(rep.bound_satisfied);
}

TEST_CASE("extension solve rejects bad input") {
  auto op = diag_op({1.0, 2.0});
  auto model = MeasureSpaceModel::unit(2);
  GradedMesh mesh = GradedMesh::for_problem(0.5, 1.0, 32);
  Vector x3 = Vector::Ones(3);
  Vector x2 = Vector::Ones(2);
  CHECK_THROWS_AS((void)solve_dirichlet(op, model, 0.5, x3, mesh), std::invalid_argument);
  CHECK_THROWS_AS((void)solve_neumann(op, model, 0.5, x3, mesh), std::invalid_argument);
  CHECK_THROWS_AS((void)solve_dirichlet(op, model, 1.0, x2, mesh), std::invalid_argument);
  // one cell is the crudest legal mesh: both boundary rows are essential, so
  // the Dirichlet solve degenerates to its boundary data
  const GradedMesh one(8.0, 1, 1.0);
  auto crude = solve_dirichlet(op, model, 0.5, x2, one);
  CHECK((crude.trace - x2).norm() == 0.0);
  CHECK(crude.u.values().row(1).norm() == 0.0);
  CHECK_NOTHROW((void)solve_neumann(op, model, 0.5, x2, one));
}
