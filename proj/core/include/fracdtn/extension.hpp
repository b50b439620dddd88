#pragma once

#include <utility>

#include <fracdtn/fractional.hpp>

namespace fracdtn {

// c_s = 2^{1-2s} Gamma(1-s) / Gamma(s), the constant relating the weighted
// normal derivative of the extension to the fractional power; c_{1/2} = 1.
double fractional_constant(double s);

struct ExtensionParams {
  double s;
  double c_s;
  QuadratureRule rule;

  ExtensionParams(double s_, QuadratureRule rule_);
  explicit ExtensionParams(double s_);
};

// U(t) x = (1/Gamma(s)) int_0^inf e^{-t^2/(4r)} r^s e^{-rA} x dr/r.
// U(0) = A^{-s}; for t > 0 this is the extension with trace A^{-s} x.
Vector poisson_apply(const SemigroupSampler& sampler, const ExtensionParams& p, double t,
                     const Vector& x);
Vector poisson_apply(const SectorialOperator& op, const MeasureSpaceModel& model,
                     const ExtensionParams& p, double t, const Vector& x);

// d/dt of t -> U(t) x:
// u'(t) = -(t / (2 Gamma(s))) int_0^inf e^{-t^2/(4r)} r^{s-1} e^{-rA} x dr/r.
Vector poisson_derivative(const SemigroupSampler& sampler, const ExtensionParams& p, double t,
                          const Vector& x);
Vector poisson_derivative(const SectorialOperator& op, const MeasureSpaceModel& model,
                          const ExtensionParams& p, double t, const Vector& x);

struct SNormalOptions {
  double t0 = 1e-3;              // largest lattice point of the t -> 0 extrapolation
  int levels = 4;                // Richardson stages (t0, t0/2, ..., t0/2^levels)
  double max_error_estimate = 1e-5;  // relative guard on the last correction
};

// lim_{t->0} -t^{1-2s} d/dt [U(t) A^s x] = c_s A^s x, evaluated through the
// substituted quadrature in tau = r/t^2 and Richardson extrapolation with the
// exponent ladder {2-2s, 2, 4-2s, 4, ...}. Requires a coercive operator.
Vector s_normal_derivative(const SectorialOperator& op, const MeasureSpaceModel& model,
                           const ExtensionParams& p, const Vector& x,
                           const SNormalOptions& opts = {});

// For A Hermitian coercive in H: returns (e^{-t sqrt(A)} x, U_{1/2}(t) sqrt(A) x);
// the two must coincide.
std::pair<Vector, Vector> half_case_identity(const SectorialOperator& op,
                                             const MeasureSpaceModel& model, double t,
                                             const Vector& x);

}  // namespace fracdtn
