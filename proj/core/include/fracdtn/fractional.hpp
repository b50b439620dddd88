#pragma once

#include <fracdtn/quadrature.hpp>
#include <fracdtn/semigroup.hpp>

namespace fracdtn {

// A^s x through the eigendecomposition (principal branch powers). Requires
// every eigenvalue to satisfy Re >= 0; eigenvalues at 0 map to 0.
Vector frac_power_spectral(const SectorialOperator& op, const MeasureSpaceModel& model, double s,
                           const Vector& x, double cond_cap = 1e8);
Matrix frac_power_spectral_matrix(const SectorialOperator& op, const MeasureSpaceModel& model,
                                  double s, double cond_cap = 1e8);
// A^{-s} x, s in (0,1); requires an invertible coercive operator.
Vector inverse_frac_power_spectral(const SectorialOperator& op, const MeasureSpaceModel& model,
                                   double s, const Vector& x, double cond_cap = 1e8);

// A^{-s} x, s in (0,1), by quadrature of  (1/Gamma(s)) int_0^inf r^s e^{-rA} x dr/r.
Vector negative_frac_power(const SemigroupSampler& sampler, double s, const Vector& x,
                           const QuadratureRule& rule);

// A^s x = A (A^{-(1-s)} x), s in (0,1). Requires coercivity > 0; operators
// with vertex 0 go through the regularized-limit module instead.
Vector frac_power_balakrishnan(const SectorialOperator& op, const MeasureSpaceModel& model,
                               double s, const Vector& x, const QuadratureRule& rule);
Vector frac_power_balakrishnan(const Matrix& A, const SemigroupSampler& sampler, double s,
                               const Vector& x, const QuadratureRule& rule);

// (zI + A)^{-1} x.
Vector resolvent_apply(const SectorialOperator& op, Complex z, const Vector& x);

}  // namespace fracdtn
