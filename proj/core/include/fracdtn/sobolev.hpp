#pragma once

#include <fracdtn/grid_function.hpp>
#include <fracdtn/measure_space.hpp>

namespace fracdtn {

namespace detail {

// int_a^b t^{beta-1} dt for 0 <= a < b, beta > 0, stable for thin cells.
double power_moment(double a, double b, double beta);

// Exact integrals over [a, b] against the weight t^alpha, alpha in (-1, 1):
//   stiff = int t^alpha dt
//   j00 = int phi_a(t)^2 t^alpha dt, j01 = int phi_a phi_b t^alpha dt,
//   j11 = int phi_b(t)^2 t^alpha dt
// for the P1 hat functions phi_a = (b-t)/h, phi_b = (t-a)/h. The weight is
// never sampled pointwise; all moments are closed-form.
struct CellMoments {
  double stiff, j00, j01, j11;
};
CellMoments cell_moments(double a, double b, double alpha);

}  // namespace detail

// || u ||_{W_s} = ( int_0^T ( ||u(t)||_V^2 + ||u'(t)||_H^2 ) t^{2s-1} dt )^{1/2}
// for piecewise-linear u; the weight moments are exact per cell.
double ws_norm(const GridFunction& u, double s, const MeasureSpaceModel& model);

// b_s(u, v) = int_0^T ( <u'(t), v'(t)>_H + <A u(t), v(t)>_H ) t^{1-2s} dt
// for piecewise-linear u, v on the same mesh.
Complex bs_form(const GridFunction& u, const GridFunction& v, const Matrix& A, double s,
                const MeasureSpaceModel& model);

// Recovers y from the local model u(t) = u(0) - y t^{2s}/(2s) + o(t^{2s}) using
// the first cell: y = 2s (u_0 - u_1) / t_1^{2s}. Exact on the model itself.
Vector discrete_s_normal(const GridFunction& u, double s);

// | int <w',v>_{V',V} dt + int <w,v'>_H dt + <w(0),v(0)>_pairing | with nodal
// derivatives from second-order finite differences and trapezoidal time
// integration. Vanishes (to discretization order) when w, v decay at T.
double integration_by_parts_residual(const GridFunction& w, const GridFunction& v,
                                     const MeasureSpaceModel& model);

}  // namespace fracdtn
