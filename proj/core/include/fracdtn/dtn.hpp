#pragma once

#include <fracdtn/grid_function.hpp>
#include <fracdtn/sectorial.hpp>
#include <fracdtn/sobolev.hpp>

namespace fracdtn {

// How the boundary flux y (the discrete s-normal derivative, y ~ c_s A^s x)
// is read off a solved extension.
enum class FluxExtraction {
  // b_s(u, chi e_p) with the ramp test chi(t) = (T - t)/T. Algebraically equal
  // to testing with the first hat function once the interior equations hold,
  // but avoids differencing across the (possibly microscopic) first cell, so
  // it stays stable under strong mesh grading.
  VariationalFlux,
  // 2s (u_0 - u_1) / t_1^{2s}, exact on the local model u = x - y t^{2s}/(2s).
  FirstCellModel,
};

struct DtnOptions {
  FluxExtraction extraction = FluxExtraction::VariationalFlux;
  bool compute_energy = true;
};

struct ExtensionSolution {
  GridFunction u;
  Vector trace;     // u(0)
  Vector s_normal;  // extracted flux
  Complex energy;   // b_s(u, u), 0 when compute_energy is off
};

// Piecewise-linear Galerkin solve of the extension problem on a graded mesh,
// with the weight t^{1-2s} integrated in closed form per cell and the value
// u(T) = 0 imposed as the far-field truncation.
//
// Dirichlet: u(0) = x essential, interior rows of b_s(u, .) = 0.
// Neumann:  b_s(u, v) = <y, v(0)> for all v vanishing at T.
ExtensionSolution solve_dirichlet(const SectorialOperator& op, const MeasureSpaceModel& model,
                                  double s, const Vector& x, const GradedMesh& mesh,
                                  const DtnOptions& opts = {});
ExtensionSolution solve_neumann(const SectorialOperator& op, const MeasureSpaceModel& model,
                                double s, const Vector& y, const GradedMesh& mesh,
                                const DtnOptions& opts = {});

// Matrix of x -> s_normal(solve_dirichlet(x)); the factorization is reused
// across the n basis columns.
Matrix dtn_matrix(const SectorialOperator& op, const MeasureSpaceModel& model, double s,
                  const GradedMesh& mesh, const DtnOptions& opts = {});

struct IsomorphismReport {
  double dtn_norm;        // [H,V]_s -> [H,V']_s
  double inverse_norm;    // [H,V']_s -> [H,V]_s
  double trace_constant;  // measured trace-map constant c
  double stability_bound; // c^2 / min(coercivity, 1)
  bool bound_satisfied;   // inverse_norm <= stability_bound (up to roundoff)
};

// Measures the discrete map norms in the interpolation-space metrics and
// checks the stability bound. The trace constant is taken over the Dirichlet
// basis solutions plus the extremal right singular vector of the inverse map.
IsomorphismReport verify_dtn_isomorphism(const SectorialOperator& op,
                                         const MeasureSpaceModel& model, double s,
                                         const GradedMesh& mesh);

// Relative defect of b_s(u, u) = <s_normal, trace> for a Dirichlet solution.
double dirichlet_energy_identity(const ExtensionSolution& sol, const MeasureSpaceModel& model);

}  // namespace fracdtn
